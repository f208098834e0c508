#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toricsym/blowup.hpp"
#include "toricsym/fan.hpp"

namespace toricsym {

enum class ClassLabel { kNone, kA, kB, kC, kD, kCremona2 };

std::string to_string(ClassLabel label);

/// Permutation of the original ray indices: index i maps to perm[i - 1].
using Relabeling = std::vector<int>;

std::vector<Relabeling> all_relabelings(int rank);
BlowupConfig relabel(const BlowupConfig& config, const Relabeling& perm);

/// Lexicographically least member of the relabeling orbit.
BlowupConfig canonical_form(const BlowupConfig& config);

/// Rank 3: every point subset with every ordered sequence of distinct lines.
/// Rank 2: every point subset.
std::vector<BlowupConfig> enumerate_configs(int rank);

struct Orbit {
  BlowupConfig representative;
  std::size_t size = 0;
};

/// Orbits under relabeling of the original rays. Point sets compare as sets,
/// line sequences position by position. Sorted by representative.
std::vector<Orbit> dedup(std::span<const BlowupConfig> configs);

/// Label by the blowup centers of the four distinguished families (and the
/// three-point blowup of P^2).
ClassLabel class_label_for(const BlowupConfig& config);

/// Invariant of the fan up to GL(n, Z): the least normal form obtained by
/// mapping an ordered maximal cone to the standard basis.
std::vector<IntVec> fan_signature(const Fan& fan);

struct CensusRecord {
  BlowupConfig representative;
  std::size_t orbit_size = 0;
  std::size_t n_symmetries = 0;
  std::size_t n_nontrivial = 0;
  std::size_t n_nontrivial_up_to_relabeling = 0;
  ClassLabel class_label = ClassLabel::kNone;
  std::size_t space_id = 0;  // isomorphism class of the fan among the records
  bool anticanonical_ok = false;
};

/// Build every representative, enumerate and classify its symmetries.
/// Work is split over `threads` workers (0 = hardware concurrency); results
/// do not depend on the split.
std::vector<CensusRecord> scan(std::span<const Orbit> orbits, unsigned threads = 0);

struct CensusReport {
  int rank = 3;
  std::size_t raw_count = 0;
  std::optional<std::size_t> orbit_count;  // absent when deduplication is off
  std::vector<CensusRecord> records;

  std::size_t nontrivial_orbit_count() const;
  std::size_t distinct_space_count() const;
  /// Isomorphism classes of spaces carrying a nontrivial symmetry.
  std::size_t nontrivial_space_count() const;
};

CensusReport run_census(int rank, bool deduplicate = true, unsigned threads = 0);

}  // namespace toricsym
