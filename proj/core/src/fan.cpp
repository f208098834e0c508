#include "toricsym/fan.hpp"

#include <algorithm>
#include <sstream>

#include "toricsym/error.hpp"

namespace toricsym {

Cone::Cone(std::vector<RayId> rays) : rays_(std::move(rays)) {
  std::sort(rays_.begin(), rays_.end());
  rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
}

Cone::Cone(std::initializer_list<RayId> rays) : Cone(std::vector<RayId>(rays)) {}

bool Cone::contains(RayId r) const { return std::binary_search(rays_.begin(), rays_.end(), r); }

bool Cone::contains(const Cone& face) const {
  return std::includes(rays_.begin(), rays_.end(), face.rays_.begin(), face.rays_.end());
}

std::map<RayId, Int> WallRelation::coefficients() const {
  std::map<RayId, Int> out;
  out[opposite.first] += 1;
  out[opposite.second] += 1;
  for (std::size_t i = 0; i < wall.rays().size(); ++i) out[wall.rays()[i]] -= wall_coefficients[i];
  return out;
}

Fan::Fan(int rank, std::vector<Ray> rays, std::set<Cone> maximal_cones)
    : rank_(rank), rays_(std::move(rays)), maximal_cones_(std::move(maximal_cones)) {
  if (rank_ != 2 && rank_ != 3) throw Error(ErrorCode::kInvalidFan, "fan rank must be 2 or 3");
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].id != static_cast<RayId>(i)) throw Error(ErrorCode::kInvalidFan, "ray ids must be 0..n-1");
  }
  for (const Cone& c : maximal_cones_)
    for (RayId r : c.rays())
      if (r < 0 || static_cast<std::size_t>(r) >= rays_.size())
        throw Error(ErrorCode::kInvalidFan, "cone references unknown ray");
}

std::optional<RayId> Fan::find_ray(std::span<const Int> v) const {
  for (const Ray& r : rays_)
    if (std::equal(r.vector.begin(), r.vector.end(), v.begin(), v.end())) return r.id;
  return std::nullopt;
}

std::optional<RayId> Fan::find_label(std::string_view label) const {
  for (const Ray& r : rays_)
    if (r.label == label) return r.id;
  return std::nullopt;
}

bool Fan::is_cone(const Cone& c) const {
  return std::any_of(maximal_cones_.begin(), maximal_cones_.end(),
                     [&](const Cone& m) { return m.contains(c); });
}

std::vector<Cone> Fan::maximal_cones_containing(const Cone& c) const {
  std::vector<Cone> out;
  for (const Cone& m : maximal_cones_)
    if (m.contains(c)) out.push_back(m);
  return out;
}

std::set<Cone> Fan::faces(int k) const {
  std::set<Cone> out;
  if (k < 0 || k > rank_) return out;
  for (const Cone& m : maximal_cones_) {
    const auto& r = m.rays();
    std::vector<bool> pick(r.size(), false);
    std::fill(pick.begin(), pick.begin() + std::min<std::size_t>(k, r.size()), true);
    if (static_cast<std::size_t>(k) > r.size()) continue;
    do {
      std::vector<RayId> face;
      for (std::size_t i = 0; i < r.size(); ++i)
        if (pick[i]) face.push_back(r[i]);
      out.insert(Cone(std::move(face)));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

void Fan::validate() const {
  const auto fail = [](const std::string& why) { throw Error(ErrorCode::kInvalidFan, why); };
  std::set<IntVec> seen_vectors;
  std::set<std::string> seen_labels;
  for (const Ray& r : rays_) {
    if (r.vector.size() != static_cast<std::size_t>(rank_)) fail("ray " + r.label + " has wrong length");
    if (!is_primitive(r.vector)) fail("ray " + r.label + " is not primitive");
    if (!seen_vectors.insert(r.vector).second) fail("duplicate ray vector " + to_string(r.vector));
    if (!seen_labels.insert(r.label).second) fail("duplicate ray label " + r.label);
  }
  if (maximal_cones_.empty()) fail("fan has no maximal cones");
  for (const Cone& c : maximal_cones_) {
    if (c.dim() != static_cast<std::size_t>(rank_)) fail("cone " + cone_label(c) + " is not simplicial of full dimension");
    std::vector<IntVec> cols;
    for (RayId r : c.rays()) cols.push_back(ray(r).vector);
    if (!is_unimodular(IntMat::from_columns(cols))) fail("cone " + cone_label(c) + " is not smooth");
  }
  for (const Cone& w : walls()) {
    if (maximal_cones_containing(w).size() != 2) fail("wall " + cone_label(w) + " is not shared by two maximal cones");
  }
}

bool Fan::is_valid() const noexcept {
  try {
    validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::string Fan::cone_label(const Cone& c) const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < c.rays().size(); ++i) os << (i ? "," : "") << ray(c.rays()[i]).label;
  os << '>';
  return os.str();
}

Fan p3_fan() {
  std::vector<Ray> rays = {
      {0, {-1, -1, -1}, "v1"},
      {1, {1, 0, 0}, "v2"},
      {2, {0, 1, 0}, "v3"},
      {3, {0, 0, 1}, "v4"},
  };
  return Fan(3, std::move(rays), {Cone{0, 1, 2}, Cone{0, 1, 3}, Cone{0, 2, 3}, Cone{1, 2, 3}});
}

Fan p2_fan() {
  std::vector<Ray> rays = {
      {0, {-1, -1}, "v1"},
      {1, {1, 0}, "v2"},
      {2, {0, 1}, "v3"},
  };
  return Fan(2, std::move(rays), {Cone{0, 1}, Cone{0, 2}, Cone{1, 2}});
}

namespace {

std::string subdivision_label(const Fan& fan, const Cone& center) {
  std::vector<std::string> parts;
  for (RayId r : center.rays()) {
    const std::string& l = fan.ray(r).label;
    parts.push_back(!l.empty() && l.front() == 'v' ? l.substr(1) : l);
  }
  std::sort(parts.begin(), parts.end());
  std::string label = "v";
  for (const auto& p : parts) label += p;
  while (fan.find_label(label)) label += '\'';
  return label;
}

}  // namespace

std::pair<Fan, RayId> star_subdivide(const Fan& fan, const Cone& center, std::optional<std::string> label) {
  if (center.dim() < 2 || !fan.is_cone(center)) {
    throw Error(ErrorCode::kInvalidCenter, "invalid center " + fan.cone_label(center));
  }
  IntVec w(static_cast<std::size_t>(fan.rank()), 0);
  for (RayId r : center.rays()) w = add(w, fan.ray(r).vector);
  if (!is_primitive(w)) throw Error(ErrorCode::kInvalidCenter, "center generator sum is not primitive");
  if (fan.find_ray(w)) throw Error(ErrorCode::kInvalidCenter, "subdivision ray already present");

  const RayId new_id = static_cast<RayId>(fan.ray_count());
  std::vector<Ray> rays = fan.rays();
  rays.push_back({new_id, w, label ? *label : subdivision_label(fan, center)});

  std::set<Cone> cones;
  for (const Cone& m : fan.maximal_cones()) {
    if (!m.contains(center)) {
      cones.insert(m);
      continue;
    }
    for (RayId r : center.rays()) {
      std::vector<RayId> replaced;
      for (RayId x : m.rays())
        if (x != r) replaced.push_back(x);
      replaced.push_back(new_id);
      cones.insert(Cone(std::move(replaced)));
    }
  }
  Fan out(fan.rank(), std::move(rays), std::move(cones));
#if TORICSYM_CHECK_INVARIANTS
  out.validate();
#endif
  return {std::move(out), new_id};
}

std::vector<Cone> minimal_nonfaces(const Fan& fan) {
  std::vector<Cone> out;
  const int n = static_cast<int>(fan.ray_count());
  for (int size = 2; size <= fan.rank() + 1; ++size) {
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    if (size > n) break;
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      std::vector<RayId> ids;
      for (int i = 0; i < n; ++i)
        if (pick[static_cast<std::size_t>(i)]) ids.push_back(i);
      const Cone c(ids);
      if (fan.is_cone(c)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop < ids.size() && minimal; ++drop) {
        std::vector<RayId> sub;
        for (std::size_t i = 0; i < ids.size(); ++i)
          if (i != drop) sub.push_back(ids[i]);
        minimal = fan.is_cone(Cone(std::move(sub)));
      }
      if (minimal) out.push_back(c);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

WallRelation wall_relation(const Fan& fan, const Cone& wall) {
  const auto containing = fan.maximal_cones_containing(wall);
  if (wall.dim() + 1 != static_cast<std::size_t>(fan.rank()) || containing.size() != 2) {
    throw Error(ErrorCode::kNotAWall, "not a wall: " + fan.cone_label(wall));
  }
  RayId opp[2];
  for (int i = 0; i < 2; ++i) {
    for (RayId r : containing[static_cast<std::size_t>(i)].rays())
      if (!wall.contains(r)) opp[i] = r;
  }
  if (opp[0] > opp[1]) std::swap(opp[0], opp[1]);

  std::vector<IntVec> cols;
  for (RayId r : wall.rays()) cols.push_back(fan.ray(r).vector);
  const IntVec rhs = add(fan.ray(opp[0]).vector, fan.ray(opp[1]).vector);
  auto a = solve_integer(IntMat::from_columns(cols), rhs);
  if (!a) throw Error(ErrorCode::kInternal, "wall relation has no integer solution at " + fan.cone_label(wall));
  return WallRelation{wall, {opp[0], opp[1]}, std::move(*a)};
}

}  // namespace toricsym
