#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "toricsym/blowup.hpp"
#include "toricsym/fan.hpp"
#include "toricsym/lattice.hpp"

namespace toricsym {

/// Divisor class in the basis [H, E..., F...] of the enclosing space.
struct DivisorClass {
  IntVec coords;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Curve class beta = d h - sum a_i e_i - sum b_j f_j, stored as (d, a..., b...).
/// With this sign convention the divisor/curve pairing is the plain dot
/// product of coordinate vectors.
struct CurveClass {
  IntVec coords;

  Int degree() const { return coords.at(0); }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

Int pairing(const DivisorClass& d, const CurveClass& c);

struct ChowPresentation {
  std::vector<std::string> generators;            // ray labels
  std::vector<Cone> sr_relations;                 // square-free monomials
  std::vector<std::map<RayId, Int>> linear_relations;  // sum <u, v_r> D_r, u = e_1..e_n
};

ChowPresentation presentation(const BlowupSpace& space);

/// Intersection number of `rank` ray divisors, counted with multiplicity.
/// Repeated factors are removed through the linear relation of the dual
/// functional u with <u, v_a> = 1 vanishing on the rest of a maximal cone
/// containing the support. `cone_choice` picks which containing cone to use
/// at every reduction step (modulo the number of candidates); the result does
/// not depend on it.
Int intersect_rays(const Fan& fan, std::span<const RayId> factors, std::size_t cone_choice = 0);

/// Memoised intersection numbers of ray divisors on one fan.
class IntersectionTable {
 public:
  explicit IntersectionTable(const Fan& fan) : fan_(&fan) {}

  Int operator()(std::span<const RayId> factors);
  Int operator()(RayId a, RayId b, RayId c);
  Int operator()(RayId a, RayId b);

 private:
  const Fan* fan_;
  std::unordered_map<std::uint64_t, Int> memo_;
};

/// D_a . D_b . D_c on a rank-3 space.
Int triple(const BlowupSpace& space, RayId a, RayId b, RayId c);

/// Rays-level expansion of a divisor class through the ledger section.
IntVec expand_to_rays(const BlowupSpace& space, const DivisorClass& d);

DivisorClass ray_divisor_class(const BlowupSpace& space, RayId r);
DivisorClass basis_divisor(const BlowupSpace& space, std::size_t slot);

/// Degree of the product of `rank` divisor classes.
Int intersection_number(const BlowupSpace& space, std::span<const DivisorClass> factors);

/// Class of the torus-invariant curve V(wall), read off by pairing with each
/// basis divisor.
CurveClass curve_class_of_wall(const BlowupSpace& space, const Cone& wall);

/// X . Y as a curve class on a rank-3 space.
CurveClass product(const BlowupSpace& space, const DivisorClass& x, const DivisorClass& y);

/// -K = sum of all ray divisor classes.
DivisorClass anticanonical(const BlowupSpace& space);

/// 4H - 2 sum E - sum F on P^3 blowups, 3H - sum E on P^2 blowups.
DivisorClass expected_anticanonical(const BlowupSpace& space);

std::string format_divisor(const BlowupSpace& space, const DivisorClass& d);
std::string format_curve(const BlowupSpace& space, const CurveClass& c);
std::string format_ray_relation(const Fan& fan, const std::map<RayId, Int>& terms);

}  // namespace toricsym
