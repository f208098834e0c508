#include "report.hpp"

namespace toricsym::report {

namespace {

json cone_labels(const Fan& fan, const Cone& c) {
  json out = json::array();
  for (RayId r : c.rays()) out.push_back(fan.ray(r).label);
  return out;
}

json matrix_rows(const IntMat& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

}  // namespace

json fan_to_json(const Fan& fan) {
  json rays = json::array();
  for (const Ray& r : fan.rays()) rays.push_back({{"label", r.label}, {"vector", r.vector}});
  json cones = json::array();
  for (const Cone& c : fan.maximal_cones()) cones.push_back(cone_labels(fan, c));
  return {{"rank", fan.rank()}, {"rays", rays}, {"maximal_cones", cones}};
}

json ledger_to_json(const BlowupSpace& space) {
  json classes = json::object();
  for (const Ray& r : space.fan().rays())
    classes[r.label] = space.ledger().ray_classes[static_cast<std::size_t>(r.id)];
  return {{"basis", space.ledger().basis_names}, {"ray_classes", classes}};
}

json presentation_to_json(const Fan& fan, const ChowPresentation& p) {
  json sr = json::array();
  for (const Cone& c : p.sr_relations) sr.push_back(cone_labels(fan, c));
  json linear = json::array();
  for (const auto& rel : p.linear_relations) {
    json terms = json::object();
    for (const auto& [ray, coeff] : rel) terms[fan.ray(ray).label] = coeff;
    linear.push_back(terms);
  }
  return {{"generators", p.generators}, {"sr_relations", sr}, {"linear_relations", linear}};
}

json symmetry_to_json(const BlowupSpace& space, const ToricSymmetry& sym, std::size_t index) {
  const Fan& fan = space.fan();
  json perm = json::object();
  for (std::size_t r = 0; r < sym.ray_perm.size(); ++r)
    perm[fan.ray(static_cast<RayId>(r)).label] = fan.ray(sym.ray_perm[r]).label;
  const SymmetryClassification cls = classify(space, sym);
  return {
      {"index", index},
      {"matrix", matrix_rows(sym.matrix)},
      {"ray_permutation", perm},
      {"divisor_pushforward", {{"basis", space.ledger().basis_names}, {"matrix", matrix_rows(sym.div_push)}}},
      {"curve_pushforward", {{"basis", space.curve_basis_names()}, {"matrix", matrix_rows(sym.curve_push)}}},
      {"trivial", cls.trivial},
      {"h_coefficient", cls.h_coefficient},
  };
}

json analyze_payload(const BlowupSpace& space) {
  const auto group = find_symmetries(space);
  json syms = json::array();
  std::size_t nontrivial = 0;
  for (std::size_t i = 0; i < group.size(); ++i) {
    syms.push_back(symmetry_to_json(space, group[i], i));
    if (!classify(space, group[i]).trivial) ++nontrivial;
  }
  const DivisorClass minus_k = anticanonical(space);
  return {
      {"space", {{"rank", space.rank()}, {"centers", space.config().to_string()}}},
      {"fan", fan_to_json(space.fan())},
      {"chow", presentation_to_json(space.fan(), presentation(space))},
      {"ledger", ledger_to_json(space)},
      {"anticanonical", {{"coords", minus_k.coords}, {"text", format_divisor(space, minus_k)}}},
      {"symmetries", syms},
      {"summary",
       {{"n_symmetries", group.size()},
        {"n_nontrivial", nontrivial},
        {"n_nontrivial_up_to_relabeling", nontrivial ? count_nontrivial_up_to_relabeling(space, group) : 0}}},
  };
}

json census_payload(const CensusReport& report) {
  json out = {{"rank", report.rank}, {"raw_count", report.raw_count}};
  if (!report.orbit_count) return out;
  out["orbit_count"] = *report.orbit_count;
  out["nontrivial_orbit_count"] = report.nontrivial_orbit_count();
  out["distinct_space_count"] = report.distinct_space_count();
  out["nontrivial_space_count"] = report.nontrivial_space_count();
  json records = json::array();
  for (const auto& r : report.records) {
    records.push_back({
        {"representative", r.representative.to_string()},
        {"orbit_size", r.orbit_size},
        {"n_symmetries", r.n_symmetries},
        {"n_nontrivial", r.n_nontrivial},
        {"n_nontrivial_up_to_relabeling", r.n_nontrivial_up_to_relabeling},
        {"class_label", to_string(r.class_label)},
        {"space_id", r.space_id},
        {"anticanonical_ok", r.anticanonical_ok},
    });
  }
  out["records"] = records;
  return out;
}

json envelope(const std::string& command, json payload) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"payload", std::move(payload)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace toricsym::report
