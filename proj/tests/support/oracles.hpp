#pragma once

// Independent reference implementations used to cross-check the library.
// They are deliberately naive: cofactor expansion, Cramer's rule, explicit
// series products and exhaustive search.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "gfm/arrangement.hpp"
#include "gfm/cyclotomic.hpp"
#include "gfm/fermat_group.hpp"
#include "gfm/invariants.hpp"
#include "gfm/matrix.hpp"
#include "gfm/permutation.hpp"

namespace oracle {

using gfm::CyclotomicScalar;
using gfm::Integer;
using gfm::Matrix;
using gfm::Permutation;
using gfm::Rational;
using gfm::StandardParameter;
using Table = std::vector<std::vector<Rational>>;

template <class F>
F cofactor_determinant(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  F total = zero_like(m(0, 0));
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j)
      if (j != c) cols.push_back(j);
    const F term = m(0, c) * cofactor_determinant(m.submatrix(rows, cols));
    if (c % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

/// Coordinates of v in the basis given by `basis` columns, by Cramer's rule.
inline std::vector<Rational> cramer(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v) {
  const auto m = Matrix<Rational>::from_columns(basis);
  const Rational det = cofactor_determinant(m);
  std::vector<Rational> out;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto replaced = basis;
    replaced[j] = v;
    out.push_back(cofactor_determinant(Matrix<Rational>::from_columns(replaced)) / det);
  }
  return out;
}

/// Standard parameter of an ordered list of dual points: frame coordinates
/// c_j(q) / c_j(q_{d+2}), scaled so that the last one is 1.
inline Table cramer_normalize(const std::vector<std::vector<Rational>>& points, int d) {
  const auto frame = static_cast<std::size_t>(d) + 1;
  const std::vector<std::vector<Rational>> basis(points.begin(), points.begin() + static_cast<long>(frame));
  const auto unit = cramer(basis, points[frame]);
  Table out;
  for (std::size_t i = frame + 1; i < points.size(); ++i) {
    const auto c = cramer(basis, points[i]);
    const Rational last = c[frame - 1] / unit[frame - 1];
    std::vector<Rational> row;
    for (std::size_t j = 0; j + 1 < frame; ++j) row.push_back(c[j] / unit[j] / last);
    out.push_back(std::move(row));
  }
  return out;
}

/// Reorder so position eta(j) holds hyperplane j, then renormalize.
inline StandardParameter reorder_and_renormalize(const Permutation& eta, const StandardParameter& lambda) {
  const auto points = gfm::dual_points_of(lambda);
  std::vector<std::vector<Rational>> moved(points.size());
  for (std::size_t j = 0; j < points.size(); ++j)
    moved[static_cast<std::size_t>(eta(static_cast<int>(j) + 1) - 1)] = points[j];
  return StandardParameter(lambda.d(), lambda.n(), cramer_normalize(moved, lambda.d()));
}

/// Membership in X_{n,2} via the explicit list of inequalities for lines,
/// together with the requirement that both columns lie in
/// {z_j not in {0,1}, z_i != z_j}.
inline bool d2_explicit_conditions(const Table& rows) {
  const auto m = rows.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Rational &di = rows[i][0], &mi = rows[i][1];
    if (di.is_zero() || mi.is_zero() || di == Rational(1) || mi == Rational(1)) return false;
    if (di == mi) return false;
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const Rational &dj = rows[j][0], &mj = rows[j][1];
      if (di == dj || mi == mj) return false;
      if (di * mj == dj * mi) return false;
      const auto ones = Matrix<Rational>::from_rows({{1, 1, 1}, {di, mi, 1}, {dj, mj, 1}});
      if (cofactor_determinant(ones).is_zero()) return false;
      for (std::size_t l = 0; l < m; ++l) {
        if (l == i || l == j) continue;
        const auto triple =
            Matrix<Rational>::from_rows({{di, mi, 1}, {dj, mj, 1}, {rows[l][0], rows[l][1], 1}});
        if (cofactor_determinant(triple).is_zero()) return false;
      }
    }
  }
  return true;
}

/// Cross ratio on P^1 sending z1, z2, z3 to infinity, 0, 1; points are
/// homogeneous pairs [a : b].
inline Rational chart_cross_ratio(const std::vector<std::vector<Rational>>& anchors, const std::vector<Rational>& z) {
  const auto br = [](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    return u[0] * v[1] - u[1] * v[0];
  };
  return br(z, anchors[1]) * br(anchors[2], anchors[0]) / (br(z, anchors[0]) * br(anchors[2], anchors[1]));
}

/// Coefficient of t^r in (1 - t^k)^(n-d) * (1 - t)^-(n+1) by multiplying
/// truncated power series term by term.
inline std::vector<Integer> hilbert_series(int d, int k, int n, std::size_t terms) {
  std::vector<Integer> series(terms, 0);
  series[0] = 1;
  for (int f = 0; f < n - d; ++f) {
    std::vector<Integer> next(terms, 0);
    for (std::size_t i = 0; i < terms; ++i) {
      next[i] += series[i];
      if (i + static_cast<std::size_t>(k) < terms) next[i + static_cast<std::size_t>(k)] -= series[i];
    }
    series = std::move(next);
  }
  for (int f = 0; f < n + 1; ++f)
    for (std::size_t i = 1; i < terms; ++i) series[i] += series[i - 1];
  return series;
}

/// Leading coefficient of a degree-d polynomial from d+1 consecutive values:
/// the d-th forward difference divided by d!.
inline Rational leading_from_differences(std::vector<Integer> values, int d) {
  for (int step = 0; step < d; ++step)
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
  Integer fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  return Rational(mpq_class(values[0], fact));
}

/// Exhaustively enumerates projective points of the diagonal system with
/// coordinates drawn from `candidates` (first nonzero coordinate 1) and
/// returns, for every exponent level of `g`, how many points are supported
/// on that level set.
inline std::map<int, long> brute_force_fixed_counts(const Matrix<Rational>& coefficients, int k,
                                                    const std::vector<CyclotomicScalar>& candidates,
                                                    const gfm::GroupElement& g) {
  const std::size_t size = coefficients.cols();
  const int order = candidates.front().order();
  std::vector<CyclotomicScalar> powers;
  for (const auto& c : candidates) powers.push_back(pow(c, k));
  std::map<int, long> counts;

  std::vector<std::size_t> pick(size, 0);
  const auto zero_index = [&] {
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (candidates[i].is_zero()) return i;
    return candidates.size();
  }();
  const auto one_index = [&] {
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (candidates[i] == CyclotomicScalar(order, Rational(1))) return i;
    return candidates.size();
  }();

  for (std::size_t lead = 0; lead < size; ++lead) {
    // Coordinates before `lead` are zero, coordinate `lead` is one, the rest range freely.
    std::vector<std::size_t> free(size - lead - 1, 0);
    while (true) {
      for (std::size_t i = 0; i < lead; ++i) pick[i] = zero_index;
      pick[lead] = one_index;
      for (std::size_t i = 0; i < free.size(); ++i) pick[lead + 1 + i] = free[i];

      bool on_variety = true;
      for (std::size_t r = 0; r < coefficients.rows() && on_variety; ++r) {
        CyclotomicScalar value(order);
        for (std::size_t c = 0; c < size; ++c)
          if (!coefficients(r, c).is_zero()) value += CyclotomicScalar(order, coefficients(r, c)) * powers[pick[c]];
        on_variety = value.is_zero();
      }
      if (on_variety) {
        std::optional<int> level;
        bool fixed = true;
        for (std::size_t c = 0; c < size; ++c) {
          if (pick[c] == zero_index) continue;
          const int e = g.exponents()[c];
          if (level && *level != e) fixed = false;
          level = e;
        }
        if (fixed) ++counts[*level];
      }

      std::size_t pos = 0;
      while (pos < free.size() && ++free[pos] == candidates.size()) free[pos++] = 0;
      if (pos == free.size()) break;
    }
  }
  return counts;
}

inline Permutation random_permutation(std::size_t size, std::mt19937_64& rng) {
  std::vector<int> images(size);
  for (std::size_t i = 0; i < size; ++i) images[i] = static_cast<int>(i) + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

inline Rational random_small_rational(std::mt19937_64& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 5);
  return Rational(mpq_class(num(rng), den(rng)));
}

inline Matrix<Rational> random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::vector<Rational> entries;
  for (std::size_t i = 0; i < rows * cols; ++i) entries.push_back(random_small_rational(rng));
  return Matrix<Rational>(rows, cols, std::move(entries));
}

inline Matrix<Rational> random_invertible(std::size_t n, std::mt19937_64& rng) {
  while (true) {
    auto m = random_matrix(n, n, rng);
    if (!gfm::determinant(m).is_zero()) return m;
  }
}

inline gfm::GroupElement random_element(int k, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> e(-2L * k, 2L * k);
  std::vector<long> exps(static_cast<std::size_t>(n) + 1);
  for (auto& x : exps) x = e(rng);
  return gfm::GroupElement::from_exponents(k, exps);
}

}  // namespace oracle
