#pragma once

#include <cstddef>
#include <vector>

#include "toricsym/blowup.hpp"
#include "toricsym/chow.hpp"
#include "toricsym/lattice.hpp"

namespace toricsym {

/// A lattice automorphism permuting the cones of the fan, with its induced
/// actions on divisor and curve class coordinates.
struct ToricSymmetry {
  IntMat matrix;                // acts on column vectors of Z^n
  std::vector<RayId> ray_perm;  // ray r maps to ray_perm[r]
  IntMat div_push;              // on [H, E..., F...] coordinates
  IntMat curve_push;            // on (d, a..., b...) coordinates
};

struct SymmetryClassification {
  bool trivial = true;
  Int h_coefficient = 1;  // H-coordinate of div_push * H
};

/// Ray permutation induced by `matrix`, or empty if some ray is not mapped to
/// a ray or maximal cones are not permuted.
std::vector<RayId> induced_ray_permutation(const Fan& fan, const IntMat& matrix);

/// The full automorphism group of the fan, sorted by matrix entries.
/// Candidates send the standard basis to distinct rays with determinant +-1.
std::vector<ToricSymmetry> find_symmetries(const BlowupSpace& space);

/// Build a symmetry from a matrix already known to preserve the fan.
/// Throws Error(kInvalidArgument) if it does not.
ToricSymmetry make_symmetry(const BlowupSpace& space, const IntMat& matrix);

/// tau_*[D_v] = [D_{tau v}], extended linearly through the ledger section.
IntMat pushforward_divisors(const BlowupSpace& space, const std::vector<RayId>& ray_perm);

/// Basis curves written as integer combinations of wall curves, walls
/// permuted, images read back in the curve basis.
IntMat pushforward_curves(const BlowupSpace& space, const std::vector<RayId>& ray_perm);

CurveClass apply_to_curve(const ToricSymmetry& sym, const CurveClass& beta);
DivisorClass apply_to_divisor(const ToricSymmetry& sym, const DivisorClass& d);

/// Trivial iff every ray stays in its family (original / point-exceptional /
/// line-exceptional). Throws Error(kInternal) if this disagrees with the
/// criterion div_push * H == H.
SymmetryClassification classify(const BlowupSpace& space, const ToricSymmetry& sym);

/// Nontrivial symmetries counted modulo pre- and post-composition with the
/// trivial ones (double cosets T \ N / T).
std::size_t count_nontrivial_up_to_relabeling(const BlowupSpace& space, const std::vector<ToricSymmetry>& group);

/// s1 after s2.
ToricSymmetry compose(const BlowupSpace& space, const ToricSymmetry& s1, const ToricSymmetry& s2);

}  // namespace toricsym
