#pragma once

// Dense matrices over an exact field (Rational or CyclotomicScalar) with the
// handful of linear-algebra routines the rest of the library needs:
// determinants, rank, inverses, minors and linear solving.
//
// A field type F must provide + - * /, ==, is_zero() and the free functions
// zero_like(const F&) / one_like(const F&). The latter let generic code build
// constants of the right cyclotomic order from any existing entry.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gfm {

template <class F>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const F& fill)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
  }

  Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
    if (entries_.size() != rows * cols)
      throw std::invalid_argument("matrix entry count does not match its shape");
  }

  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    if (rows.empty() || rows.front().empty())
      throw std::invalid_argument("matrix needs at least one row and column");
    std::vector<F> entries;
    entries.reserve(rows.size() * rows.front().size());
    for (const auto& row : rows) {
      if (row.size() != rows.front().size()) throw std::invalid_argument("ragged matrix rows");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(rows.size(), rows.front().size(), std::move(entries));
  }

  static Matrix from_columns(const std::vector<std::vector<F>>& columns) {
    return from_rows(columns).transposed();
  }

  static Matrix identity(std::size_t n, const F& one) {
    Matrix m(n, n, one - one);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  F& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const F> row(std::size_t r) const {
    return std::span<const F>(entries_).subspan(r * cols_, cols_);
  }
  std::vector<F> column(std::size_t c) const {
    std::vector<F> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }
  const std::vector<F>& entries() const noexcept { return entries_; }

  Matrix transposed() const {
    std::vector<F> out;
    out.reserve(entries_.size());
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return Matrix(cols_, rows_, std::move(out));
  }

  /// Submatrix on the given (sorted, distinct) row and column indices.
  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    std::vector<F> out;
    out.reserve(row_idx.size() * col_idx.size());
    for (auto r : row_idx)
      for (auto c : col_idx) out.push_back((*this)(r, c));
    return Matrix(row_idx.size(), col_idx.size(), std::move(out));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_, zero_like(a.entries_.front()));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend std::vector<F> operator*(const Matrix& a, std::span<const F> v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<F> out(a.rows_, zero_like(a.entries_.front()));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }
  friend std::vector<F> operator*(const Matrix& a, const std::vector<F>& v) {
    return a * std::span<const F>(v);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<F> entries_;
};

namespace detail {

// In-place row echelon form by Gaussian elimination. Returns the pivot
// columns and the parity of the row swaps performed.
template <class F>
std::pair<std::vector<std::size_t>, bool> row_reduce(Matrix<F>& m, bool reduced) {
  std::vector<std::size_t> pivots;
  bool odd_swaps = false;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t found = pivot_row;
    while (found < m.rows() && m(found, c).is_zero()) ++found;
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(found, j), m(pivot_row, j));
      odd_swaps = !odd_swaps;
    }
    const F inv = one_like(m(pivot_row, c)) / m(pivot_row, c);
    if (reduced)
      for (std::size_t j = c; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t r = reduced ? 0 : pivot_row + 1; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, c).is_zero()) continue;
      const F factor = reduced ? m(r, c) : m(r, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= factor * m(pivot_row, j);
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return {pivots, odd_swaps};
}

template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(std::span<const std::size_t>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Determinant by fraction-free (Bareiss) elimination.
template <class F>
F determinant(const Matrix<F>& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix<F> m = a;
  const std::size_t n = m.rows();
  F previous = one_like(m(0, 0));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return zero_like(m(0, 0));
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      m(i, k) = zero_like(m(0, 0));
    }
    previous = m(k, k);
  }
  F result = m(n - 1, n - 1);
  return negate ? zero_like(result) - result : result;
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
  Matrix<F> m = a;
  return detail::row_reduce(m, false).first.size();
}

/// Inverse of a square matrix, or nullopt when singular.
template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  const F zero = zero_like(a(0, 0));
  Matrix<F> augmented(n, 2 * n, zero);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
    augmented(r, n + r) = one_like(zero);
  }
  const auto pivots = detail::row_reduce(augmented, true).first;
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> out(n, n, zero);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = augmented(r, n + c);
  return out;
}

/// True iff every order x order minor of `m` is nonzero.
template <class F>
bool all_minors_nonzero(const Matrix<F>& m, std::size_t order) {
  if (order == 0 || order > std::min(m.rows(), m.cols()))
    throw std::invalid_argument("minor order must be in 1..min(rows, cols)");
  bool all_nonzero = true;
  detail::for_each_combination(m.rows(), order, [&](std::span<const std::size_t> rows) {
    detail::for_each_combination(m.cols(), order, [&](std::span<const std::size_t> cols) {
      if (determinant(m.submatrix(rows, cols)).is_zero()) all_nonzero = false;
      return all_nonzero;
    });
    return all_nonzero;
  });
  return all_nonzero;
}

enum class SolveStatus { unique, underdetermined, inconsistent };

template <class F>
struct LinearSolveResult {
  SolveStatus status;
  std::size_t rank;
  /// Present unless inconsistent; free variables are set to zero.
  std::optional<std::vector<F>> solution;
};

/// Solves A x = b exactly by Gauss-Jordan elimination.
template <class F>
LinearSolveResult<F> solve_linear(const Matrix<F>& a, std::span<const F> b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: rows(A) != length(b)");
  const std::size_t n = a.cols();
  const F zero = zero_like(a(0, 0));
  Matrix<F> augmented(a.rows(), n + 1, zero);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
    augmented(r, n) = b[r];
  }
  const auto pivots = detail::row_reduce(augmented, true).first;
  if (!pivots.empty() && pivots.back() == n)
    return {SolveStatus::inconsistent, pivots.size() - 1, std::nullopt};

  std::vector<F> x(n, zero);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = augmented(i, n);
  const auto status = pivots.size() == n ? SolveStatus::unique : SolveStatus::underdetermined;
  return {status, pivots.size(), std::move(x)};
}

template <class F>
LinearSolveResult<F> solve_linear(const Matrix<F>& a, const std::vector<F>& b) {
  return solve_linear(a, std::span<const F>(b));
}

/// Scalar multiple of v whose first nonzero entry is one. Rejects the zero
/// vector with std::invalid_argument.
template <class F>
std::vector<F> projective_normalize(std::span<const F> v) {
  auto first = std::find_if(v.begin(), v.end(), [](const F& x) { return !x.is_zero(); });
  if (first == v.end()) throw std::invalid_argument("projective_normalize: zero vector");
  const F scale = one_like(*first) / *first;
  std::vector<F> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * scale);
  return out;
}

template <class F>
std::vector<F> projective_normalize(const std::vector<F>& v) {
  return projective_normalize(std::span<const F>(v));
}

}  // namespace gfm
