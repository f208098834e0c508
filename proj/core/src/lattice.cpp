#include "toricsym/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

#include "toricsym/error.hpp"

namespace toricsym {

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(std::initializer_list<std::initializer_list<Int>> rows) {
  std::vector<IntVec> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  IntMat m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) {
      throw Error(ErrorCode::kInvalidArgument, "ragged matrix rows");
    }
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * ncols);
  }
  return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec>& columns) {
  return from_rows(columns).transpose();
}

IntVec IntMat::row(std::size_t r) const {
  return IntVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVec IntMat::column(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::kOverflow, "integer overflow in add");
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorCode::kOverflow, "integer overflow in sub");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::kOverflow, "integer overflow in mul");
  return out;
}

Int gcd_of(std::span<const Int> v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

bool is_primitive(std::span<const Int> v) { return gcd_of(v) == 1; }

IntVec add(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kInvalidArgument, "vector length mismatch");
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

IntVec sub(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kInvalidArgument, "vector length mismatch");
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_sub(a[i], b[i]);
  return out;
}

IntVec scale(Int k, std::span<const Int> v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = checked_mul(k, v[i]);
  return out;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kInvalidArgument, "vector length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::kInvalidArgument, "matrix shape mismatch");
  IntMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
    }
  return out;
}

IntVec operator*(const IntMat& m, std::span<const Int> v) {
  if (m.cols() != v.size()) throw Error(ErrorCode::kInvalidArgument, "matrix/vector shape mismatch");
  IntVec out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i] = checked_add(out[i], checked_mul(m(i, j), v[j]));
  return out;
}

Int det(const IntMat& m) {
  if (!m.square()) throw Error(ErrorCode::kInvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const Int num = checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j)));
        a(i, j) = num / prev;  // exact by Sylvester's identity
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMat& m) {
  if (!m.square()) return false;
  const Int d = det(m);
  return d == 1 || d == -1;
}

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// column_j -= q * column_k, applied to both the working matrix and the transform.
void column_axpy(IntMat& a, IntMat& u, std::size_t j, std::size_t k, Int q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, j) = checked_sub(a(r, j), checked_mul(q, a(r, k)));
  for (std::size_t r = 0; r < u.rows(); ++r) u(r, j) = checked_sub(u(r, j), checked_mul(q, u(r, k)));
}

void column_swap(IntMat& a, IntMat& u, std::size_t j, std::size_t k) {
  if (j == k) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, j), a(r, k));
  for (std::size_t r = 0; r < u.rows(); ++r) std::swap(u(r, j), u(r, k));
}

void column_negate(IntMat& a, IntMat& u, std::size_t j) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, j) = -a(r, j);
  for (std::size_t r = 0; r < u.rows(); ++r) u(r, j) = -u(r, j);
}

}  // namespace

HermiteForm hermite_column_form(const IntMat& input) {
  HermiteForm h{input, IntMat::identity(input.cols()), {}, 0};
  IntMat& a = h.reduced;
  IntMat& u = h.transform;
  const std::size_t n = a.cols();
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.rows() && k < n; ++i) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = k; j < n; ++j)
        if (a(i, j) != 0 && (best == n || std::llabs(a(i, j)) < std::llabs(a(i, best)))) best = j;
      if (best == n) break;
      column_swap(a, u, k, best);
      bool done = true;
      for (std::size_t j = k + 1; j < n; ++j) {
        column_axpy(a, u, j, k, a(i, j) / a(i, k));
        if (a(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (a(i, k) == 0) continue;
    if (a(i, k) < 0) column_negate(a, u, k);
    for (std::size_t j = 0; j < k; ++j) column_axpy(a, u, j, k, floor_div(a(i, j), a(i, k)));
    h.pivot_rows.push_back(i);
    ++k;
  }
  h.rank = k;
  return h;
}

std::optional<IntVec> solve_integer(const IntMat& a, std::span<const Int> b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::kInvalidArgument, "right-hand side length mismatch");
  const HermiteForm h = hermite_column_form(a);
  IntVec y(a.cols(), 0);
  std::size_t p = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int residual = b[i];
    for (std::size_t j = 0; j < p; ++j) residual = checked_sub(residual, checked_mul(h.reduced(i, j), y[j]));
    if (p < h.rank && h.pivot_rows[p] == i) {
      const Int pivot = h.reduced(i, p);
      if (residual % pivot != 0) return std::nullopt;
      y[p] = residual / pivot;
      ++p;
    } else if (residual != 0) {
      return std::nullopt;
    }
  }
  return h.transform * std::span<const Int>(y);
}

IntMat inverse_unimodular(const IntMat& m) {
  if (!is_unimodular(m)) throw Error(ErrorCode::kNotUnimodular, "not unimodular");
  const std::size_t n = m.rows();
  std::vector<IntVec> columns;
  columns.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    IntVec e(n, 0);
    e[c] = 1;
    auto x = solve_integer(m, e);
    if (!x) throw Error(ErrorCode::kInternal, "unimodular system without integer solution");
    columns.push_back(std::move(*x));
  }
  return IntMat::from_columns(columns);
}

std::string to_string(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const IntMat& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? "," : "") << to_string(m.row(r));
  os << ']';
  return os.str();
}

}  // namespace toricsym
