#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gfm/matrix.hpp"
#include "gfm/rational.hpp"

namespace gfm {

/// Coordinates [r_1 : ... : r_{d+1}] of the hyperplane r_1 t_1 + ... + r_{d+1} t_{d+1} = 0.
using DualPoint = std::vector<Rational>;

/// A hyperplane of P^d, stored by its projectively normalized dual point.
class Hyperplane {
 public:
  /// Throws std::invalid_argument for the zero vector.
  explicit Hyperplane(const DualPoint& dual_point);

  const DualPoint& dual_point() const noexcept { return dual_point_; }
  std::size_t ambient_dimension() const noexcept { return dual_point_.size() - 1; }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

 private:
  DualPoint dual_point_;
};

/// Ordered list of n+1 >= d+2 hyperplanes of P^d in general position.
class Arrangement {
 public:
  /// Validates shapes (std::invalid_argument) and general position
  /// (PreconditionError).
  static Arrangement create(int dimension, const std::vector<DualPoint>& dual_points);

  int dimension() const noexcept { return dimension_; }
  /// n, so that the arrangement has n+1 hyperplanes.
  int n() const noexcept { return static_cast<int>(hyperplanes_.size()) - 1; }
  const std::vector<Hyperplane>& hyperplanes() const noexcept { return hyperplanes_; }
  std::vector<DualPoint> dual_points() const;

  /// The (d+1) x (n+1) matrix whose columns are the dual points.
  Matrix<Rational> matrix() const;

 private:
  Arrangement(int dimension, std::vector<Hyperplane> hyperplanes)
      : dimension_(dimension), hyperplanes_(std::move(hyperplanes)) {}

  int dimension_;
  std::vector<Hyperplane> hyperplanes_;
};

/// Point of the standard parameter space X_{n,d}: a table of n-d-1 rows and
/// d columns. Row i is the affine part of the dual point
/// [lambda_{i,1} : ... : lambda_{i,d} : 1] of hyperplane d+2+i.
class StandardParameter {
 public:
  /// Checks the table shape only (std::invalid_argument); membership in
  /// X_{n,d} is is_standard_parameter().
  StandardParameter(int d, int n, std::vector<std::vector<Rational>> rows);

  int d() const noexcept { return d_; }
  int n() const noexcept { return n_; }
  const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }
  const Rational& entry(std::size_t row, std::size_t col) const { return rows_.at(row).at(col); }
  /// The column lambda_j = (lambda_{1,j}, ..., lambda_{n-d-1,j}), j zero-based.
  std::vector<Rational> column(std::size_t j) const;
  /// Row-major flattening; the order used by canonical representatives.
  std::vector<Rational> flattened() const;

  std::string to_string() const;

  friend bool operator==(const StandardParameter&, const StandardParameter&) = default;
  friend std::strong_ordering operator<=>(const StandardParameter& a, const StandardParameter& b);

 private:
  int d_;
  int n_;
  std::vector<std::vector<Rational>> rows_;
};

/// True iff every d+1 of the points are linearly independent, i.e. all
/// maximal minors of the (d+1) x (n+1) point matrix are nonzero. Needs at
/// least d+2 points; rejects wrong lengths and zero vectors.
bool is_general_position(std::span<const DualPoint> points, int d);

struct Normalization {
  /// Acts on dual points (column vectors): transform * q_j is a multiple of
  /// e_j for j <= d+1 and of (1, ..., 1) for j = d+2.
  Matrix<Rational> transform;
  StandardParameter parameter;
};

/// The projective frame normalization of an ordered arrangement.
Normalization normalize(const Arrangement& arrangement);

/// Normalization of raw dual points without the general-position check.
/// Throws PreconditionError if the first d+2 points do not form a frame or a
/// later point lands on the hyperplane at infinity.
Normalization normalize_points(std::span<const DualPoint> points, int d);

/// Dual points e_1, ..., e_{d+1}, (1, ..., 1), then [lambda_i : 1].
std::vector<DualPoint> dual_points_of(const StandardParameter& parameter);

/// The ordered arrangement (L_1(Lambda), ..., L_{n+1}(Lambda)). Throws
/// PreconditionError when the parameter is not in X_{n,d}.
Arrangement arrangement_of(const StandardParameter& parameter);

/// Membership in X_{n,d}.
bool is_standard_parameter(const StandardParameter& parameter);

/// Image of every dual point under `transform`.
std::vector<DualPoint> transform_points(const Matrix<Rational>& transform,
                                        std::span<const DualPoint> points);

/// Random element of X_{n,d} with small-height rational entries
/// (rejection sampling; deterministic for a given engine state).
StandardParameter random_standard_parameter(int n, int d, std::mt19937_64& rng);

}  // namespace gfm
