#include "toricsym/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "toricsym/chow.hpp"
#include "toricsym/error.hpp"
#include "toricsym/symmetry.hpp"

namespace toricsym {

std::string to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::kNone: return "None";
    case ClassLabel::kA: return "A";
    case ClassLabel::kB: return "B";
    case ClassLabel::kC: return "C";
    case ClassLabel::kD: return "D";
    case ClassLabel::kCremona2: return "Cremona2";
  }
  return "None";
}

std::vector<Relabeling> all_relabelings(int rank) {
  Relabeling p(static_cast<std::size_t>(rank + 1));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Relabeling> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

BlowupConfig relabel(const BlowupConfig& config, const Relabeling& perm) {
  auto image = [&](const BlowupCenter& c) {
    std::vector<int> idx;
    for (int i : c.indices) idx.push_back(perm.at(static_cast<std::size_t>(i - 1)));
    std::sort(idx.begin(), idx.end());
    return BlowupCenter{c.kind, std::move(idx)};
  };
  BlowupConfig out;
  out.rank = config.rank;
  for (const auto& c : config.points) out.points.push_back(image(c));
  for (const auto& c : config.lines) out.lines.push_back(image(c));
  std::sort(out.points.begin(), out.points.end());
  return out;
}

BlowupConfig canonical_form(const BlowupConfig& config) {
  static const std::vector<Relabeling> perms2 = all_relabelings(2);
  static const std::vector<Relabeling> perms3 = all_relabelings(3);
  const auto& perms = config.rank == 2 ? perms2 : perms3;
  BlowupConfig best = relabel(config, perms.front());
  for (std::size_t i = 1; i < perms.size(); ++i) {
    BlowupConfig c = relabel(config, perms[i]);
    if (c < best) best = std::move(c);
  }
  return best;
}

namespace {

template <typename F>
void for_each_subset(const std::vector<BlowupCenter>& items, F&& f) {
  const std::size_t n = items.size();
  // Order subsets by size, then lexicographically.
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<BlowupCenter> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) sub.push_back(items[i]);
      f(std::move(sub));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
}

std::vector<BlowupCenter> all_centers(int rank, CenterKind kind) {
  std::vector<BlowupCenter> out;
  const int n = rank + 1;
  const int size = kind == CenterKind::kPoint ? rank : 2;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + size, true);
  do {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) idx.push_back(i + 1);
    out.push_back({kind, std::move(idx)});
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<BlowupConfig> enumerate_configs(int rank) {
  if (rank != 2 && rank != 3) throw Error(ErrorCode::kInvalidArgument, "rank must be 2 or 3");
  const auto points = all_centers(rank, CenterKind::kPoint);
  const auto lines = rank == 3 ? all_centers(rank, CenterKind::kLine) : std::vector<BlowupCenter>{};

  std::vector<BlowupConfig> out;
  for_each_subset(points, [&](std::vector<BlowupCenter> pts) {
    for_each_subset(lines, [&](std::vector<BlowupCenter> chosen) {
      // every ordering of the chosen lines
      std::vector<std::size_t> order(chosen.size());
      std::iota(order.begin(), order.end(), 0);
      do {
        BlowupConfig c;
        c.rank = rank;
        c.points = pts;
        for (std::size_t i : order) c.lines.push_back(chosen[i]);
        out.push_back(std::move(c));
      } while (std::next_permutation(order.begin(), order.end()));
    });
  });
  return out;
}

std::vector<Orbit> dedup(std::span<const BlowupConfig> configs) {
  std::map<BlowupConfig, std::size_t> counts;
  for (const auto& c : configs) ++counts[canonical_form(c)];
  std::vector<Orbit> out;
  out.reserve(counts.size());
  for (auto& [rep, n] : counts) out.push_back({rep, n});
  return out;
}

ClassLabel class_label_for(const BlowupConfig& config) {
  if (config.rank == 2) {
    return config.points.size() == 3 ? ClassLabel::kCremona2 : ClassLabel::kNone;
  }
  if (config.points.size() == 4 && config.lines.size() == 6) return ClassLabel::kD;
  static const BlowupConfig a = canonical_form(parse_centers("p123,l34,l24"));
  static const BlowupConfig b = canonical_form(parse_centers("p123,p124,l23,l34,l14"));
  static const BlowupConfig c = canonical_form(parse_centers("p124,p123,l34,l23,l14"));
  const BlowupConfig canon = canonical_form(config);
  if (canon == a) return ClassLabel::kA;
  if (canon == b) return ClassLabel::kB;
  if (canon == c) return ClassLabel::kC;
  return ClassLabel::kNone;
}

std::vector<IntVec> fan_signature(const Fan& fan) {
  std::vector<IntVec> best;
  for (const Cone& m : fan.maximal_cones()) {
    std::vector<RayId> order = m.rays();
    do {
      std::vector<IntVec> cols;
      for (RayId r : order) cols.push_back(fan.ray(r).vector);
      const IntMat to_standard = inverse_unimodular(IntMat::from_columns(cols));
      std::vector<IntVec> image(fan.ray_count());
      for (const Ray& r : fan.rays()) image[static_cast<std::size_t>(r.id)] = to_standard * std::span<const Int>(r.vector);

      std::vector<IntVec> cones;
      for (const Cone& c : fan.maximal_cones()) {
        std::vector<IntVec> vs;
        for (RayId r : c.rays()) vs.push_back(image[static_cast<std::size_t>(r)]);
        std::sort(vs.begin(), vs.end());
        IntVec flat;
        for (const auto& v : vs) flat.insert(flat.end(), v.begin(), v.end());
        cones.push_back(std::move(flat));
      }
      std::sort(cones.begin(), cones.end());
      if (best.empty() || cones < best) best = std::move(cones);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return best;
}

namespace {

struct ScanResult {
  CensusRecord record;
  std::vector<IntVec> signature;
};

ScanResult scan_one(const Orbit& orbit) {
  ScanResult out;
  CensusRecord& rec = out.record;
  rec.representative = orbit.representative;
  rec.orbit_size = orbit.size;

  const BlowupSpace space = build(orbit.representative);
  const auto group = find_symmetries(space);
  rec.n_symmetries = group.size();
  for (const auto& s : group)
    if (!classify(space, s).trivial) ++rec.n_nontrivial;
  rec.n_nontrivial_up_to_relabeling = rec.n_nontrivial ? count_nontrivial_up_to_relabeling(space, group) : 0;
  rec.class_label = class_label_for(orbit.representative);
  rec.anticanonical_ok = anticanonical(space) == expected_anticanonical(space);
  out.signature = fan_signature(space.fan());
  return out;
}

}  // namespace

std::vector<CensusRecord> scan(std::span<const Orbit> orbits, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, orbits.size())));

  std::vector<ScanResult> results(orbits.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < orbits.size() && !failed; i = next++) {
      try {
        results[i] = scan_one(orbits[i]);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Records keep the input order; space ids follow first occurrence.
  std::map<std::vector<IntVec>, std::size_t> ids;
  std::vector<CensusRecord> out;
  out.reserve(results.size());
  for (auto& r : results) {
    auto [it, inserted] = ids.emplace(std::move(r.signature), ids.size());
    r.record.space_id = it->second;
    out.push_back(std::move(r.record));
  }
  return out;
}

std::size_t CensusReport::nontrivial_orbit_count() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CensusRecord& r) { return r.n_nontrivial > 0; }));
}

std::size_t CensusReport::distinct_space_count() const {
  std::set<std::size_t> ids;
  for (const auto& r : records) ids.insert(r.space_id);
  return ids.size();
}

std::size_t CensusReport::nontrivial_space_count() const {
  std::set<std::size_t> ids;
  for (const auto& r : records)
    if (r.n_nontrivial > 0) ids.insert(r.space_id);
  return ids.size();
}

CensusReport run_census(int rank, bool deduplicate, unsigned threads) {
  CensusReport report;
  report.rank = rank;
  const auto configs = enumerate_configs(rank);
  report.raw_count = configs.size();
  if (!deduplicate) return report;
  const auto orbits = dedup(configs);
  report.orbit_count = orbits.size();
  report.records = scan(orbits, threads);
  return report;
}

}  // namespace toricsym
