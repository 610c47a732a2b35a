#include "gfm/arrangement.hpp"

#include <stdexcept>

#include "gfm/errors.hpp"

namespace gfm {

namespace {

void check_points(std::span<const DualPoint> points, int d) {
  if (d < 1) throw std::invalid_argument("dimension d must be >= 1");
  if (points.size() < static_cast<std::size_t>(d) + 2)
    throw std::invalid_argument("an arrangement in P^" + std::to_string(d) + " needs at least " +
                                std::to_string(d + 2) + " hyperplanes");
  for (const auto& p : points) {
    if (p.size() != static_cast<std::size_t>(d) + 1)
      throw std::invalid_argument("dual point has length " + std::to_string(p.size()) +
                                  ", expected " + std::to_string(d + 1));
    bool nonzero = false;
    for (const auto& x : p) nonzero = nonzero || !x.is_zero();
    if (!nonzero) throw std::invalid_argument("dual point is the zero vector");
  }
}

Matrix<Rational> point_matrix(std::span<const DualPoint> points) {
  return Matrix<Rational>::from_columns(std::vector<DualPoint>(points.begin(), points.end()));
}

}  // namespace

Hyperplane::Hyperplane(const DualPoint& dual_point)
    : dual_point_(projective_normalize(dual_point)) {}

Arrangement Arrangement::create(int dimension, const std::vector<DualPoint>& dual_points) {
  check_points(dual_points, dimension);
  if (!is_general_position(dual_points, dimension))
    throw PreconditionError("hyperplanes are not in general position");
  std::vector<Hyperplane> hyperplanes;
  hyperplanes.reserve(dual_points.size());
  for (const auto& p : dual_points) hyperplanes.emplace_back(p);
  return Arrangement(dimension, std::move(hyperplanes));
}

std::vector<DualPoint> Arrangement::dual_points() const {
  std::vector<DualPoint> out;
  out.reserve(hyperplanes_.size());
  for (const auto& h : hyperplanes_) out.push_back(h.dual_point());
  return out;
}

Matrix<Rational> Arrangement::matrix() const { return point_matrix(dual_points()); }

StandardParameter::StandardParameter(int d, int n, std::vector<std::vector<Rational>> rows)
    : d_(d), n_(n), rows_(std::move(rows)) {
  if (d < 1) throw std::invalid_argument("standard parameter needs d >= 1");
  if (n < d + 1) throw std::invalid_argument("standard parameter needs n >= d + 1");
  if (rows_.size() != static_cast<std::size_t>(n - d - 1))
    throw std::invalid_argument("lambda table must have n - d - 1 = " + std::to_string(n - d - 1) +
                                " rows, got " + std::to_string(rows_.size()));
  for (const auto& row : rows_)
    if (row.size() != static_cast<std::size_t>(d))
      throw std::invalid_argument("lambda table rows must have d = " + std::to_string(d) + " entries");
}

std::vector<Rational> StandardParameter::column(std::size_t j) const {
  std::vector<Rational> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.at(j));
  return out;
}

std::vector<Rational> StandardParameter::flattened() const {
  std::vector<Rational> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::string StandardParameter::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ", ";
    out += "(";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) out += ", ";
      out += rows_[i][j].to_string();
    }
    out += ")";
  }
  return out + ")";
}

std::strong_ordering operator<=>(const StandardParameter& a, const StandardParameter& b) {
  if (auto c = a.d_ <=> b.d_; c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  const auto fa = a.flattened();
  const auto fb = b.flattened();
  return std::lexicographical_compare_three_way(fa.begin(), fa.end(), fb.begin(), fb.end());
}

bool is_general_position(std::span<const DualPoint> points, int d) {
  check_points(points, d);
  return all_minors_nonzero(point_matrix(points), static_cast<std::size_t>(d) + 1);
}

Normalization normalize_points(std::span<const DualPoint> points, int d) {
  check_points(points, d);
  const auto frame = static_cast<std::size_t>(d) + 1;
  const auto basis = point_matrix(points.subspan(0, frame));
  const auto basis_inverse = inverse(basis);
  if (!basis_inverse) throw PreconditionError("first d+1 hyperplanes are linearly dependent");

  // Write q_{d+2} = sum c_j q_j; scaling row j of the inverse by 1/c_j sends
  // q_{d+2} to the all-ones vector.
  const auto weights = *basis_inverse * points[frame];
  Matrix<Rational> transform = *basis_inverse;
  for (std::size_t r = 0; r < frame; ++r) {
    if (weights[r].is_zero())
      throw PreconditionError("hyperplane d+2 is not in general position with the first d+1");
    const Rational scale = weights[r].inverse();
    for (std::size_t c = 0; c < frame; ++c) transform(r, c) *= scale;
  }

  std::vector<std::vector<Rational>> rows;
  for (std::size_t j = frame + 1; j < points.size(); ++j) {
    auto image = transform * points[j];
    if (image.back().is_zero())
      throw PreconditionError("hyperplane " + std::to_string(j + 1) +
                              " passes through the intersection of the first d hyperplanes");
    const Rational last_inverse = image.back().inverse();
    image.pop_back();
    for (auto& x : image) x *= last_inverse;
    rows.push_back(std::move(image));
  }
  const int n = static_cast<int>(points.size()) - 1;
  return {std::move(transform), StandardParameter(d, n, std::move(rows))};
}

Normalization normalize(const Arrangement& arrangement) {
  const auto points = arrangement.dual_points();
  return normalize_points(points, arrangement.dimension());
}

std::vector<DualPoint> dual_points_of(const StandardParameter& parameter) {
  const auto size = static_cast<std::size_t>(parameter.d()) + 1;
  std::vector<DualPoint> points;
  points.reserve(static_cast<std::size_t>(parameter.n()) + 1);
  for (std::size_t j = 0; j < size; ++j) {
    DualPoint e(size, Rational(0));
    e[j] = 1;
    points.push_back(std::move(e));
  }
  points.emplace_back(size, Rational(1));
  for (const auto& row : parameter.rows()) {
    DualPoint p = row;
    p.emplace_back(1);
    points.push_back(std::move(p));
  }
  return points;
}

Arrangement arrangement_of(const StandardParameter& parameter) {
  return Arrangement::create(parameter.d(), dual_points_of(parameter));
}

bool is_standard_parameter(const StandardParameter& parameter) {
  return is_general_position(dual_points_of(parameter), parameter.d());
}

std::vector<DualPoint> transform_points(const Matrix<Rational>& transform,
                                        std::span<const DualPoint> points) {
  std::vector<DualPoint> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(transform * p);
  return out;
}

StandardParameter random_standard_parameter(int n, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numerator(-24, 24);
  std::uniform_int_distribution<int> denominator(1, 7);
  const auto row_count = static_cast<std::size_t>(std::max(n - d - 1, 0));
  while (true) {
    std::vector<std::vector<Rational>> rows(row_count);
    for (auto& row : rows)
      for (int j = 0; j < d; ++j) row.emplace_back(Integer(numerator(rng)), Integer(denominator(rng)));
    StandardParameter candidate(d, n, std::move(rows));
    if (is_standard_parameter(candidate)) return candidate;
  }
}

}  // namespace gfm
