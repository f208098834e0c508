#include "toricsym/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toricsym/error.hpp"

namespace toricsym {

std::vector<RayId> induced_ray_permutation(const Fan& fan, const IntMat& matrix) {
  const std::size_t n = fan.ray_count();
  std::vector<RayId> perm(n);
  std::vector<bool> hit(n, false);
  for (const Ray& r : fan.rays()) {
    const IntVec image = matrix * std::span<const Int>(r.vector);
    const auto id = fan.find_ray(image);
    if (!id || hit[static_cast<std::size_t>(*id)]) return {};
    hit[static_cast<std::size_t>(*id)] = true;
    perm[static_cast<std::size_t>(r.id)] = *id;
  }
  for (const Cone& c : fan.maximal_cones()) {
    std::vector<RayId> image;
    for (RayId r : c.rays()) image.push_back(perm[static_cast<std::size_t>(r)]);
    if (!fan.maximal_cones().contains(Cone(std::move(image)))) return {};
  }
  return perm;
}

IntMat pushforward_divisors(const BlowupSpace& space, const std::vector<RayId>& ray_perm) {
  const auto& ledger = space.ledger();
  const std::size_t b = space.basis_size();
  IntMat out(b, b);
  for (std::size_t j = 0; j < b; ++j) {
    const IntVec& sec = ledger.section[j];
    for (std::size_t r = 0; r < sec.size(); ++r) {
      if (sec[r] == 0) continue;
      const IntVec& image = ledger.ray_classes[static_cast<std::size_t>(ray_perm[r])];
      for (std::size_t i = 0; i < b; ++i) out(i, j) = checked_add(out(i, j), checked_mul(sec[r], image[i]));
    }
  }
  return out;
}

namespace {

// Wall curves of a space and an integer expression of every basis curve
// coordinate vector in terms of them.
struct WallFrame {
  std::vector<Cone> walls;
  std::map<Cone, std::size_t> wall_index;
  IntMat wall_classes;                  // basis x walls
  std::vector<IntVec> basis_in_walls;   // per basis slot, coefficients on walls

  explicit WallFrame(const BlowupSpace& space) {
    const auto all = space.fan().walls();
    walls.assign(all.begin(), all.end());
    std::vector<IntVec> cols;
    for (std::size_t k = 0; k < walls.size(); ++k) {
      wall_index[walls[k]] = k;
      cols.push_back(curve_class_of_wall(space, walls[k]).coords);
    }
    wall_classes = IntMat::from_columns(cols);
    const std::size_t b = space.basis_size();
    for (std::size_t j = 0; j < b; ++j) {
      IntVec unit(b, 0);
      unit[j] = 1;
      auto x = solve_integer(wall_classes, unit);
      if (!x) throw Error(ErrorCode::kInternal, "basis not expressible in wall classes");
      basis_in_walls.push_back(std::move(*x));
    }
  }

  IntMat push(const std::vector<RayId>& ray_perm) const {
    const std::size_t b = wall_classes.rows();
    std::vector<std::size_t> wall_perm(walls.size());
    for (std::size_t k = 0; k < walls.size(); ++k) {
      std::vector<RayId> image;
      for (RayId r : walls[k].rays()) image.push_back(ray_perm[static_cast<std::size_t>(r)]);
      auto it = wall_index.find(Cone(std::move(image)));
      if (it == wall_index.end()) throw Error(ErrorCode::kInternal, "symmetry does not permute walls");
      wall_perm[k] = it->second;
    }
    IntMat out(b, b);
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < walls.size(); ++k) {
        const Int x = basis_in_walls[j][k];
        if (x == 0) continue;
        for (std::size_t i = 0; i < b; ++i)
          out(i, j) = checked_add(out(i, j), checked_mul(x, wall_classes(i, wall_perm[k])));
      }
    return out;
  }
};

ToricSymmetry assemble(const BlowupSpace& space, const WallFrame& frame, const IntMat& matrix,
                       std::vector<RayId> perm) {
  ToricSymmetry s;
  s.matrix = matrix;
  s.div_push = pushforward_divisors(space, perm);
  s.curve_push = frame.push(perm);
  s.ray_perm = std::move(perm);
  return s;
}

}  // namespace

IntMat pushforward_curves(const BlowupSpace& space, const std::vector<RayId>& ray_perm) {
  return WallFrame(space).push(ray_perm);
}

std::vector<ToricSymmetry> find_symmetries(const BlowupSpace& space) {
  const Fan& fan = space.fan();
  const auto n = static_cast<std::size_t>(fan.rank());
  const std::size_t nrays = fan.ray_count();

  // The original rays v2..v_{n+1} are the standard basis e_1..e_n.
  std::vector<IntMat> matrices;
  std::vector<std::size_t> pick(n, 0);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      std::vector<IntVec> cols;
      for (std::size_t i = 0; i < n; ++i) cols.push_back(fan.rays()[pick[i]].vector);
      IntMat m = IntMat::from_columns(cols);
      if (!is_unimodular(m)) return;
      if (!induced_ray_permutation(fan, m).empty()) matrices.push_back(std::move(m));
      return;
    }
    for (std::size_t r = 0; r < nrays; ++r) {
      if (std::find(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(depth), r) !=
          pick.begin() + static_cast<std::ptrdiff_t>(depth))
        continue;
      pick[depth] = r;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  std::sort(matrices.begin(), matrices.end());

  const WallFrame frame(space);
  std::vector<ToricSymmetry> out;
  out.reserve(matrices.size());
  for (const IntMat& m : matrices) out.push_back(assemble(space, frame, m, induced_ray_permutation(fan, m)));
  return out;
}

ToricSymmetry make_symmetry(const BlowupSpace& space, const IntMat& matrix) {
  if (!is_unimodular(matrix) || matrix.rows() != static_cast<std::size_t>(space.rank())) {
    throw Error(ErrorCode::kInvalidArgument, "not a unimodular lattice map of the right rank");
  }
  auto perm = induced_ray_permutation(space.fan(), matrix);
  if (perm.empty()) throw Error(ErrorCode::kInvalidArgument, "matrix does not preserve the fan");
  return assemble(space, WallFrame(space), matrix, std::move(perm));
}

CurveClass apply_to_curve(const ToricSymmetry& sym, const CurveClass& beta) {
  return {sym.curve_push * std::span<const Int>(beta.coords)};
}

DivisorClass apply_to_divisor(const ToricSymmetry& sym, const DivisorClass& d) {
  return {sym.div_push * std::span<const Int>(d.coords)};
}

SymmetryClassification classify(const BlowupSpace& space, const ToricSymmetry& sym) {
  bool families_preserved = true;
  for (std::size_t r = 0; r < sym.ray_perm.size(); ++r)
    if (space.family(static_cast<RayId>(r)) != space.family(sym.ray_perm[r])) families_preserved = false;

  const IntVec h_image = sym.div_push.column(0);
  bool h_fixed = h_image[0] == 1;
  for (std::size_t i = 1; i < h_image.size(); ++i) h_fixed = h_fixed && h_image[i] == 0;

  if (families_preserved != h_fixed) {
    throw Error(ErrorCode::kInternal, "triviality criteria disagree for symmetry " + to_string(sym.matrix));
  }
  return {families_preserved, h_image[0]};
}

std::size_t count_nontrivial_up_to_relabeling(const BlowupSpace& space, const std::vector<ToricSymmetry>& group) {
  std::vector<IntMat> trivial;
  std::vector<IntMat> nontrivial;
  for (const auto& s : group) (classify(space, s).trivial ? trivial : nontrivial).push_back(s.matrix);
  std::set<IntMat> seen;
  std::size_t classes = 0;
  for (const IntMat& m : nontrivial) {
    if (seen.contains(m)) continue;
    ++classes;
    for (const IntMat& a : trivial)
      for (const IntMat& b : trivial) seen.insert(a * m * b);
  }
  return classes;
}

ToricSymmetry compose(const BlowupSpace& space, const ToricSymmetry& s1, const ToricSymmetry& s2) {
  return make_symmetry(space, s1.matrix * s2.matrix);
}

}  // namespace toricsym
