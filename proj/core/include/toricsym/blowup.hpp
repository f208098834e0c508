#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "toricsym/fan.hpp"
#include "toricsym/lattice.hpp"

namespace toricsym {

enum class CenterKind { kPoint, kLine };

/// A torus-fixed point p_ijk (or p_ij on P^2) or a torus-invariant line l_ij,
/// named by the 1-based indices of the original rays spanning its cone.
struct BlowupCenter {
  CenterKind kind = CenterKind::kPoint;
  std::vector<int> indices;  // sorted, 1-based

  static BlowupCenter point(std::vector<int> indices);
  static BlowupCenter line(std::vector<int> indices);

  /// "p123", "l34".
  std::string token() const;
  /// "123", "34": suffix shared by the ray label and the class names.
  std::string index_string() const;
  bool contains_index(int i) const;

  friend bool operator==(const BlowupCenter&, const BlowupCenter&) = default;
  friend auto operator<=>(const BlowupCenter&, const BlowupCenter&) = default;
};

/// Points are an unordered set (kept sorted); lines are an ordered sequence
/// blown up after all points.
struct BlowupConfig {
  int rank = 3;
  std::vector<BlowupCenter> points;
  std::vector<BlowupCenter> lines;

  std::size_t center_count() const noexcept { return points.size() + lines.size(); }

  /// Sort points and check ranges, sizes and duplicates.
  /// Throws Error(kInvalidArgument / kDuplicate).
  void normalize();

  /// Comma-separated tokens, points first: "p123,l34,l24".
  std::string to_string() const;

  friend bool operator==(const BlowupConfig&, const BlowupConfig&) = default;
  friend auto operator<=>(const BlowupConfig&, const BlowupConfig&) = default;
};

/// Parse `p<ijk>` / `l<ij>` tokens (rank 3) or `p<ij>` tokens (rank 2).
/// Points may come in any order but must all precede lines.
BlowupConfig parse_centers(std::string_view text, int rank = 3);

enum class RayFamily { kOriginal, kPointExceptional, kLineExceptional };

/// Coordinates of every ray divisor in the basis [H, E..., F...], plus an
/// integer section expressing each basis class through ray divisors.
struct ClassLedger {
  std::vector<std::string> basis_names;  // "H", "E123", "F34", ...
  std::vector<IntVec> ray_classes;       // indexed by ray id
  std::vector<IntVec> section;           // indexed by basis slot; coefficients on rays

  std::size_t basis_size() const noexcept { return basis_names.size(); }
  /// basis_size x ray_count matrix whose column r is [D_r].
  IntMat ray_matrix() const;
  /// ray_count x basis_size matrix; ray_matrix() * section_matrix() == I.
  IntMat section_matrix() const;
};

struct HistoryStep {
  BlowupCenter center;
  RayId new_ray = 0;
};

/// Fan of an iterated toric blowup together with its class bookkeeping.
class BlowupSpace {
 public:
  BlowupSpace(BlowupConfig config, Fan fan, ClassLedger ledger, std::vector<HistoryStep> history,
              std::vector<RayFamily> families);

  const BlowupConfig& config() const noexcept { return config_; }
  const Fan& fan() const noexcept { return fan_; }
  const ClassLedger& ledger() const noexcept { return ledger_; }
  const std::vector<HistoryStep>& history() const noexcept { return history_; }
  RayFamily family(RayId r) const { return families_.at(static_cast<std::size_t>(r)); }
  const std::vector<RayFamily>& families() const noexcept { return families_; }

  int rank() const noexcept { return fan_.rank(); }
  std::size_t basis_size() const noexcept { return ledger_.basis_size(); }
  /// Curve basis names aligned with the divisor basis: "h", "e123", "f34".
  std::vector<std::string> curve_basis_names() const;

 private:
  BlowupConfig config_;
  Fan fan_;
  ClassLedger ledger_;
  std::vector<HistoryStep> history_;
  std::vector<RayFamily> families_;
};

Fan base_fan(int rank);

/// Sequential star subdivision (points in sorted order, then lines in the
/// given order) with the proper-transform ledger update.
BlowupSpace build(BlowupConfig config);

/// Re-run the history of `space` from the base fan, validating each step.
Fan replay(const BlowupSpace& space);

}  // namespace toricsym
