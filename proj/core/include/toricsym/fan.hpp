#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toricsym/lattice.hpp"

namespace toricsym {

using RayId = int;

struct Ray {
  RayId id = 0;
  IntVec vector;
  std::string label;  // "v1", "v123", "v34", ...

  friend bool operator==(const Ray&, const Ray&) = default;
};

/// A cone, stored as the sorted set of its ray ids.
class Cone {
 public:
  Cone() = default;
  explicit Cone(std::vector<RayId> rays);
  Cone(std::initializer_list<RayId> rays);

  const std::vector<RayId>& rays() const noexcept { return rays_; }
  std::size_t dim() const noexcept { return rays_.size(); }
  bool contains(RayId r) const;
  bool contains(const Cone& face) const;

  friend bool operator==(const Cone&, const Cone&) = default;
  friend auto operator<=>(const Cone&, const Cone&) = default;

 private:
  std::vector<RayId> rays_;
};

/// The relation v' + v'' = sum_i a_i w_i attached to a wall <w_1..w_{n-1}>,
/// where v', v'' are the rays completing the wall to its two maximal cones.
struct WallRelation {
  Cone wall;
  std::pair<RayId, RayId> opposite;
  std::vector<Int> wall_coefficients;  // a_i, aligned with wall.rays()

  /// Coefficients of v' + v'' - sum a_i w_i = 0 on every ray involved. These
  /// are the intersection numbers D_r . V(wall).
  std::map<RayId, Int> coefficients() const;
};

/// Simplicial fan in Z^2 or Z^3. Immutable once built; every mutation
/// returns a new fan.
class Fan {
 public:
  Fan(int rank, std::vector<Ray> rays, std::set<Cone> maximal_cones);

  int rank() const noexcept { return rank_; }
  const std::vector<Ray>& rays() const noexcept { return rays_; }
  const Ray& ray(RayId id) const { return rays_.at(static_cast<std::size_t>(id)); }
  std::size_t ray_count() const noexcept { return rays_.size(); }
  const std::set<Cone>& maximal_cones() const noexcept { return maximal_cones_; }

  std::optional<RayId> find_ray(std::span<const Int> v) const;
  std::optional<RayId> find_label(std::string_view label) const;

  /// True when the rays span a face of some maximal cone.
  bool is_cone(const Cone& c) const;
  std::vector<Cone> maximal_cones_containing(const Cone& c) const;

  /// All k-dimensional cones, found as faces of maximal cones.
  std::set<Cone> faces(int k) const;
  std::set<Cone> walls() const { return faces(rank_ - 1); }

  /// Throws Error(kInvalidFan) unless the fan is simplicial, smooth and
  /// complete with primitive, pairwise distinct rays.
  void validate() const;
  bool is_valid() const noexcept;

  std::string cone_label(const Cone& c) const;

  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  int rank_;
  std::vector<Ray> rays_;
  std::set<Cone> maximal_cones_;
};

Fan p3_fan();
Fan p2_fan();

/// Insert the ray w = sum of the center's generators and replace every maximal
/// cone s containing the center by (s \ {r}) + {w}, r ranging over the center.
/// The new ray label concatenates the index digits of the center's labels
/// unless `label` is given. Throws Error(kInvalidCenter).
std::pair<Fan, RayId> star_subdivide(const Fan& fan, const Cone& center,
                                     std::optional<std::string> label = std::nullopt);

/// Inclusion-minimal ray sets that do not span a cone.
std::vector<Cone> minimal_nonfaces(const Fan& fan);

/// Throws Error(kNotAWall) if `wall` is not contained in exactly two maximal
/// cones.
WallRelation wall_relation(const Fan& fan, const Cone& wall);

}  // namespace toricsym
