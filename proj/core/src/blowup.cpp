#include "toricsym/blowup.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "toricsym/error.hpp"

namespace toricsym {

BlowupCenter BlowupCenter::point(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  return {CenterKind::kPoint, std::move(indices)};
}

BlowupCenter BlowupCenter::line(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  return {CenterKind::kLine, std::move(indices)};
}

std::string BlowupCenter::index_string() const {
  std::string s;
  for (int i : indices) s += std::to_string(i);
  return s;
}

std::string BlowupCenter::token() const {
  return (kind == CenterKind::kPoint ? "p" : "l") + index_string();
}

bool BlowupCenter::contains_index(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

namespace {

void check_center(const BlowupCenter& c, int rank) {
  const std::size_t want = c.kind == CenterKind::kPoint ? static_cast<std::size_t>(rank) : 2;
  if (c.kind == CenterKind::kLine && rank != 3) {
    throw Error(ErrorCode::kInvalidArgument, "line centers exist only in rank 3: " + c.token());
  }
  if (c.indices.size() != want) throw Error(ErrorCode::kInvalidArgument, "wrong number of indices in " + c.token());
  for (std::size_t i = 0; i < c.indices.size(); ++i) {
    if (c.indices[i] < 1 || c.indices[i] > rank + 1)
      throw Error(ErrorCode::kInvalidArgument, "index out of range in " + c.token());
    if (i > 0 && c.indices[i] == c.indices[i - 1])
      throw Error(ErrorCode::kInvalidArgument, "repeated index in " + c.token());
  }
}

}  // namespace

void BlowupConfig::normalize() {
  if (rank != 2 && rank != 3) throw Error(ErrorCode::kInvalidArgument, "rank must be 2 or 3");
  std::set<BlowupCenter> seen;
  for (auto* group : {&points, &lines}) {
    for (auto& c : *group) {
      std::sort(c.indices.begin(), c.indices.end());
      check_center(c, rank);
      if (!seen.insert(c).second) throw Error(ErrorCode::kDuplicate, "duplicate center " + c.token());
    }
  }
  for (const auto& c : points)
    if (c.kind != CenterKind::kPoint) throw Error(ErrorCode::kInvalidArgument, "line in point list");
  for (const auto& c : lines)
    if (c.kind != CenterKind::kLine) throw Error(ErrorCode::kOrderingViolation, "ordering violation");
  std::sort(points.begin(), points.end());
}

std::string BlowupConfig::to_string() const {
  std::string s;
  for (const auto* group : {&points, &lines})
    for (const auto& c : *group) s += (s.empty() ? "" : ",") + c.token();
  return s;
}

BlowupConfig parse_centers(std::string_view text, int rank) {
  BlowupConfig config;
  config.rank = rank;
  if (rank != 2 && rank != 3) throw Error(ErrorCode::kInvalidArgument, "rank must be 2 or 3");

  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return config;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view token = trim(text.substr(start, end - start));
    start = end + 1;

    if (token.size() < 2 || (token[0] != 'p' && token[0] != 'l')) {
      throw Error(ErrorCode::kInvalidArgument, "malformed center token '" + std::string(token) + "'");
    }
    std::vector<int> idx;
    for (char ch : token.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw Error(ErrorCode::kInvalidArgument, "malformed center token '" + std::string(token) + "'");
      idx.push_back(ch - '0');
    }
    BlowupCenter c = token[0] == 'p' ? BlowupCenter::point(idx) : BlowupCenter::line(idx);
    check_center(c, rank);
    if (c.kind == CenterKind::kPoint) {
      if (!config.lines.empty()) throw Error(ErrorCode::kOrderingViolation, "ordering violation: " + c.token() + " after a line");
      config.points.push_back(std::move(c));
    } else {
      config.lines.push_back(std::move(c));
    }
    if (end == text.size()) break;
  }
  config.normalize();
  return config;
}

IntMat ClassLedger::ray_matrix() const { return IntMat::from_columns(ray_classes); }

IntMat ClassLedger::section_matrix() const { return IntMat::from_columns(section); }

BlowupSpace::BlowupSpace(BlowupConfig config, Fan fan, ClassLedger ledger, std::vector<HistoryStep> history,
                         std::vector<RayFamily> families)
    : config_(std::move(config)),
      fan_(std::move(fan)),
      ledger_(std::move(ledger)),
      history_(std::move(history)),
      families_(std::move(families)) {}

std::vector<std::string> BlowupSpace::curve_basis_names() const {
  std::vector<std::string> out = ledger_.basis_names;
  for (auto& s : out) s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  return out;
}

Fan base_fan(int rank) {
  if (rank == 3) return p3_fan();
  if (rank == 2) return p2_fan();
  throw Error(ErrorCode::kInvalidArgument, "rank must be 2 or 3");
}

namespace {

Cone center_cone(const BlowupCenter& c) {
  std::vector<RayId> ids;
  for (int i : c.indices) ids.push_back(i - 1);
  return Cone(std::move(ids));
}

}  // namespace

BlowupSpace build(BlowupConfig config) {
  config.normalize();
  Fan fan = base_fan(config.rank);
  const std::size_t n_orig = fan.ray_count();

  std::vector<BlowupCenter> order = config.points;
  order.insert(order.end(), config.lines.begin(), config.lines.end());
  const std::size_t basis = 1 + order.size();

  ClassLedger ledger;
  ledger.basis_names.push_back("H");
  for (const auto& c : order) ledger.basis_names.push_back((c.kind == CenterKind::kPoint ? "E" : "F") + c.index_string());

  IntVec h_unit(basis, 0);
  h_unit[0] = 1;
  ledger.ray_classes.assign(n_orig, h_unit);
  std::vector<RayFamily> families(n_orig, RayFamily::kOriginal);
  std::vector<HistoryStep> history;

  for (std::size_t step = 0; step < order.size(); ++step) {
    const BlowupCenter& c = order[step];
    const std::size_t slot = step + 1;
    const Cone cone = center_cone(c);
    auto [next, w] = star_subdivide(fan, cone, "v" + c.index_string());
    fan = std::move(next);

    IntVec cls(basis, 0);
    cls[slot] = 1;
    ledger.ray_classes.push_back(cls);
    for (RayId r : cone.rays()) ledger.ray_classes[static_cast<std::size_t>(r)][slot] -= 1;
    families.push_back(c.kind == CenterKind::kPoint ? RayFamily::kPointExceptional : RayFamily::kLineExceptional);
    history.push_back({c, w});
  }

  // H = D_{v1} + every exceptional class whose center lies on V(v1);
  // E_a / F_a' are their own ray divisors.
  const std::size_t nrays = fan.ray_count();
  ledger.section.assign(basis, IntVec(nrays, 0));
  ledger.section[0][0] = 1;
  for (std::size_t step = 0; step < order.size(); ++step) {
    const auto ray = static_cast<std::size_t>(history[step].new_ray);
    if (order[step].contains_index(1)) ledger.section[0][ray] = 1;
    ledger.section[step + 1][ray] = 1;
  }

  return BlowupSpace(std::move(config), std::move(fan), std::move(ledger), std::move(history), std::move(families));
}

Fan replay(const BlowupSpace& space) {
  Fan fan = base_fan(space.rank());
  fan.validate();
  for (const auto& step : space.history()) {
    auto [next, w] = star_subdivide(fan, center_cone(step.center), "v" + step.center.index_string());
    next.validate();
    if (w != step.new_ray) throw Error(ErrorCode::kInternal, "replay produced a different ray id");
    fan = std::move(next);
  }
  return fan;
}

}  // namespace toricsym
