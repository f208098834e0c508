#include "toricsym/chow.hpp"

#include <algorithm>
#include <sstream>

#include "toricsym/error.hpp"

namespace toricsym {

Int pairing(const DivisorClass& d, const CurveClass& c) { return dot(d.coords, c.coords); }

ChowPresentation presentation(const BlowupSpace& space) {
  const Fan& fan = space.fan();
  ChowPresentation p;
  for (const Ray& r : fan.rays()) p.generators.push_back(r.label);
  p.sr_relations = minimal_nonfaces(fan);
  for (int k = 0; k < fan.rank(); ++k) {
    std::map<RayId, Int> rel;
    for (const Ray& r : fan.rays())
      if (r.vector[static_cast<std::size_t>(k)] != 0) rel[r.id] = r.vector[static_cast<std::size_t>(k)];
    p.linear_relations.push_back(std::move(rel));
  }
  return p;
}

namespace {

// u with <u, v_r> = 1 for r == a and 0 for the other rays of `cone`.
IntVec dual_functional(const Fan& fan, const Cone& cone, RayId a) {
  std::vector<IntVec> rows;
  IntVec unit;
  for (RayId r : cone.rays()) {
    rows.push_back(fan.ray(r).vector);
    unit.push_back(r == a ? 1 : 0);
  }
  auto u = solve_integer(IntMat::from_rows(rows), unit);
  if (!u) throw Error(ErrorCode::kInternal, "maximal cone " + fan.cone_label(cone) + " is not unimodular");
  return *u;
}

template <typename Recurse>
Int reduce_repeated(const Fan& fan, std::vector<RayId> factors, std::size_t cone_choice, Recurse&& recurse) {
  std::sort(factors.begin(), factors.end());
  const Cone support(factors);
  if (!fan.is_cone(support)) return 0;
  if (support.dim() == factors.size()) return 1;

  RayId repeated = -1;
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i] == factors[i - 1]) {
      repeated = factors[i];
      break;
    }
  const auto candidates = fan.maximal_cones_containing(support);
  const Cone& cone = candidates[cone_choice % candidates.size()];
  const IntVec u = dual_functional(fan, cone, repeated);

  // D_a == -sum_{c != a} <u, v_c> D_c; terms inside `cone` vanish.
  auto rest = factors;
  rest.erase(std::find(rest.begin(), rest.end(), repeated));
  Int total = 0;
  for (const Ray& c : fan.rays()) {
    if (c.id == repeated) continue;
    const Int coeff = dot(u, c.vector);
    if (coeff == 0) continue;
    auto next = rest;
    next.push_back(c.id);
    total = checked_sub(total, checked_mul(coeff, recurse(std::move(next))));
  }
  return total;
}

}  // namespace

Int intersect_rays(const Fan& fan, std::span<const RayId> factors, std::size_t cone_choice) {
  if (factors.size() != static_cast<std::size_t>(fan.rank())) {
    throw Error(ErrorCode::kInvalidArgument, "intersection needs exactly rank-many factors");
  }
  std::vector<RayId> f(factors.begin(), factors.end());
  return reduce_repeated(fan, std::move(f), cone_choice,
                         [&](std::vector<RayId> next) { return intersect_rays(fan, next, cone_choice); });
}

Int IntersectionTable::operator()(std::span<const RayId> factors) {
  if (factors.size() != static_cast<std::size_t>(fan_->rank())) {
    throw Error(ErrorCode::kInvalidArgument, "intersection needs exactly rank-many factors");
  }
  std::vector<RayId> f(factors.begin(), factors.end());
  std::sort(f.begin(), f.end());
  std::uint64_t key = f.size();
  for (RayId r : f) key = (key << 8) | static_cast<std::uint64_t>(r);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const Int value = reduce_repeated(*fan_, f, 0, [&](std::vector<RayId> next) { return (*this)(next); });
  memo_.emplace(key, value);
  return value;
}

Int IntersectionTable::operator()(RayId a, RayId b, RayId c) {
  const RayId f[] = {a, b, c};
  return (*this)(f);
}

Int IntersectionTable::operator()(RayId a, RayId b) {
  const RayId f[] = {a, b};
  return (*this)(f);
}

Int triple(const BlowupSpace& space, RayId a, RayId b, RayId c) {
  if (space.rank() != 3) throw Error(ErrorCode::kInvalidArgument, "triple products need a rank-3 space");
  const RayId f[] = {a, b, c};
  return intersect_rays(space.fan(), f);
}

IntVec expand_to_rays(const BlowupSpace& space, const DivisorClass& d) {
  if (d.coords.size() != space.basis_size()) throw Error(ErrorCode::kInvalidArgument, "divisor coordinate length mismatch");
  return space.ledger().section_matrix() * std::span<const Int>(d.coords);
}

DivisorClass ray_divisor_class(const BlowupSpace& space, RayId r) {
  return {space.ledger().ray_classes.at(static_cast<std::size_t>(r))};
}

DivisorClass basis_divisor(const BlowupSpace& space, std::size_t slot) {
  IntVec v(space.basis_size(), 0);
  v.at(slot) = 1;
  return {v};
}

Int intersection_number(const BlowupSpace& space, std::span<const DivisorClass> factors) {
  if (factors.size() != static_cast<std::size_t>(space.rank())) {
    throw Error(ErrorCode::kInvalidArgument, "intersection needs exactly rank-many factors");
  }
  std::vector<std::vector<std::pair<RayId, Int>>> terms;
  for (const auto& d : factors) {
    const IntVec rays = expand_to_rays(space, d);
    std::vector<std::pair<RayId, Int>> t;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (rays[r] != 0) t.emplace_back(static_cast<RayId>(r), rays[r]);
    terms.push_back(std::move(t));
  }
  IntersectionTable table(space.fan());
  Int total = 0;
  std::vector<RayId> pick(factors.size());
  auto rec = [&](auto&& self, std::size_t depth, Int coeff) -> void {
    if (depth == terms.size()) {
      total = checked_add(total, checked_mul(coeff, table(pick)));
      return;
    }
    for (const auto& [r, c] : terms[depth]) {
      pick[depth] = r;
      self(self, depth + 1, checked_mul(coeff, c));
    }
  };
  rec(rec, 0, 1);
  return total;
}

CurveClass curve_class_of_wall(const BlowupSpace& space, const Cone& wall) {
  const WallRelation rel = wall_relation(space.fan(), wall);
  const auto& section = space.ledger().section;
  CurveClass c{IntVec(space.basis_size(), 0)};
  for (const auto& [ray, value] : rel.coefficients())
    for (std::size_t j = 0; j < section.size(); ++j)
      c.coords[j] = checked_add(c.coords[j], checked_mul(section[j][static_cast<std::size_t>(ray)], value));
  return c;
}

CurveClass product(const BlowupSpace& space, const DivisorClass& x, const DivisorClass& y) {
  if (space.rank() != 3) throw Error(ErrorCode::kInvalidArgument, "divisor products as curves need a rank-3 space");
  CurveClass c{IntVec(space.basis_size(), 0)};
  for (std::size_t j = 0; j < space.basis_size(); ++j) {
    const DivisorClass f[] = {basis_divisor(space, j), x, y};
    c.coords[j] = intersection_number(space, f);
  }
  return c;
}

DivisorClass anticanonical(const BlowupSpace& space) {
  IntVec sum(space.basis_size(), 0);
  for (const auto& cls : space.ledger().ray_classes) sum = add(sum, cls);
  return {sum};
}

DivisorClass expected_anticanonical(const BlowupSpace& space) {
  IntVec v(space.basis_size(), 0);
  v[0] = space.rank() + 1;
  for (std::size_t i = 0; i < space.history().size(); ++i) {
    const bool point = space.history()[i].center.kind == CenterKind::kPoint;
    v[i + 1] = point ? -(space.rank() - 1) : -1;
  }
  return {v};
}

namespace {

std::string format_terms(const std::vector<std::pair<Int, std::string>>& terms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [coeff, name] : terms) {
    if (coeff == 0) continue;
    const Int mag = coeff < 0 ? -coeff : coeff;
    if (first) {
      if (coeff < 0) os << '-';
    } else {
      os << (coeff < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag;
    os << name;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string format_divisor(const BlowupSpace& space, const DivisorClass& d) {
  std::vector<std::pair<Int, std::string>> terms;
  for (std::size_t i = 0; i < d.coords.size(); ++i) terms.emplace_back(d.coords[i], space.ledger().basis_names[i]);
  return format_terms(terms);
}

std::string format_curve(const BlowupSpace& space, const CurveClass& c) {
  const auto names = space.curve_basis_names();
  std::vector<std::pair<Int, std::string>> terms;
  for (std::size_t i = 0; i < c.coords.size(); ++i) terms.emplace_back(i == 0 ? c.coords[i] : -c.coords[i], names[i]);
  return format_terms(terms);
}

std::string format_ray_relation(const Fan& fan, const std::map<RayId, Int>& terms) {
  std::vector<std::pair<Int, std::string>> t;
  for (const auto& [r, coeff] : terms) {
    std::string label = fan.ray(r).label;
    t.emplace_back(coeff, "D" + (label.front() == 'v' ? label.substr(1) : label));
  }
  return format_terms(t);
}

}  // namespace toricsym
