#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toricsym {

using Int = std::int64_t;

/// Integer column vector. Ray generators live in Z^2 or Z^3; class
/// coordinate vectors are longer (one entry per basis class).
using IntVec = std::vector<Int>;

/// Dense row-major integer matrix acting on column vectors.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(std::initializer_list<std::initializer_list<Int>> rows);
  static IntMat from_rows(const std::vector<IntVec>& rows);
  static IntMat from_columns(const std::vector<IntVec>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(std::size_t r) const;
  IntVec column(std::size_t c) const;
  IntMat transpose() const;

  std::span<const Int> data() const noexcept { return data_; }

  friend bool operator==(const IntMat&, const IntMat&) = default;
  friend auto operator<=>(const IntMat&, const IntMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Overflow-checked scalar arithmetic; throws Error(kOverflow).
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

Int gcd_of(std::span<const Int> v);
bool is_primitive(std::span<const Int> v);

IntVec add(std::span<const Int> a, std::span<const Int> b);
IntVec sub(std::span<const Int> a, std::span<const Int> b);
IntVec scale(Int k, std::span<const Int> v);
Int dot(std::span<const Int> a, std::span<const Int> b);

IntMat operator*(const IntMat& a, const IntMat& b);
IntVec operator*(const IntMat& m, std::span<const Int> v);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMat& m);

bool is_unimodular(const IntMat& m);

/// Integer inverse of a matrix with determinant +-1.
/// Throws Error(kNotUnimodular) otherwise.
IntMat inverse_unimodular(const IntMat& m);

/// Column-style Hermite reduction: a * transform == reduced, where `reduced`
/// is in lower echelon form (pivot of row r sits in column pivots[k] and every
/// entry right of a pivot is zero) and `transform` is unimodular.
struct HermiteForm {
  IntMat reduced;
  IntMat transform;
  std::vector<std::size_t> pivot_rows;  // row holding the k-th pivot column
  std::size_t rank = 0;
};

HermiteForm hermite_column_form(const IntMat& a);

/// An integer solution of a * x == b if one exists. Any shape of `a` works;
/// free variables are set to zero.
std::optional<IntVec> solve_integer(const IntMat& a, std::span<const Int> b);

std::string to_string(std::span<const Int> v);
std::string to_string(const IntMat& m);

}  // namespace toricsym
