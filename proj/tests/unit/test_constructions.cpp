#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "gfm/constructions.hpp"
#include "gfm/errors.hpp"
#include "gfm/modaction.hpp"
#include "oracles.hpp"

using namespace gfm;
using V = std::vector<Rational>;

namespace {

Rational det3(const V& a, const V& b, const V& c) {
  return oracle::cofactor_determinant(Matrix<Rational>::from_rows({a, b, c}));
}

// Homogeneous coordinates of each point on a line in the basis (points[0], points[1]).
std::vector<V> line_coordinates(const std::vector<V>& points, const V& off_line) {
  std::vector<V> out;
  for (const auto& p : points) out.push_back({det3(p, points[1], off_line), det3(points[0], p, off_line)});
  return out;
}

StandardParameter random_parameter(int n, std::mt19937_64& rng) { return random_standard_parameter(n, 2, rng); }

V random_line(std::mt19937_64& rng) {
  while (true) {
    V rho{oracle::random_small_rational(rng), oracle::random_small_rational(rng), oracle::random_small_rational(rng)};
    if (!(rho[0].is_zero() && rho[1].is_zero() && rho[2].is_zero())) return rho;
  }
}

}  // namespace

TEST(Kummer, HandComputedExample) {
  const auto lambda = kummer_parameters({0, 1, 2, 3, 4, 5});
  EXPECT_EQ(lambda.column(0), (V{Rational(3) / 2, Rational(9) / 5}));
  EXPECT_EQ(lambda.column(1), (V{Rational(4) / 3, Rational(3) / 2}));
  EXPECT_TRUE(is_standard_parameter(lambda));
  EXPECT_THROW(kummer_parameters({0, 1, 2, 3, 4, 4}), std::invalid_argument);
}

TEST(Kummer, AffineInvariance) {
  std::mt19937_64 rng(77);
  int checked = 0;
  while (checked < 100) {
    std::array<Rational, 6> alpha;
    for (auto& a : alpha) a = oracle::random_small_rational(rng, 20);
    if (std::set<Rational>(alpha.begin(), alpha.end()).size() != 6) continue;
    Rational scale = oracle::random_small_rational(rng);
    if (scale.is_zero()) scale = 7;
    const Rational shift = oracle::random_small_rational(rng);
    auto moved = alpha;
    for (auto& a : moved) a = a * scale + shift;
    EXPECT_EQ(kummer_parameters(moved), kummer_parameters(alpha));
    ++checked;
  }
}

TEST(LineRestriction, MatchesProjectiveCoordinatesOnTheLine) {
  std::mt19937_64 rng(4);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 100; ++trial) {
    const int n = 4 + trial % 3;
    const auto lambda = random_parameter(n, rng);
    const auto rho = random_line(rng);
    auto lines = dual_points_of(lambda);
    lines.push_back(rho);
    if (!is_general_position(lines, 2)) {
      EXPECT_THROW(restrict_to_line(lambda, rho), PreconditionError);
      const bool coincident = std::any_of(lines.begin(), lines.end() - 1, [&](const V& q) {
        return projective_normalize(q) == projective_normalize(rho);
      });
      if (coincident)
        EXPECT_THROW(restrict_to_line(lambda, rho, true), PreconditionError);
      else
        EXPECT_TRUE(restrict_to_line(lambda, rho, true).singular);
      continue;
    }
    const auto result = restrict_to_line(lambda, rho);
    EXPECT_FALSE(result.singular);
    ASSERT_TRUE(result.eta);
    ASSERT_EQ(result.eta->size(), static_cast<std::size_t>(n - 2));
    ASSERT_TRUE(result.parameter);
    EXPECT_TRUE(is_standard_parameter(*result.parameter));

    for (std::size_t j = 0; j < result.points.size(); ++j) EXPECT_TRUE(std::inner_product(
        rho.begin(), rho.end(), result.points[j].begin(), Rational(0)).is_zero());

    const auto pairs = line_coordinates(result.points, rho);
    EXPECT_EQ(result.parameter->rows(), oracle::cramer_normalize(pairs, 1)) << lambda.to_string();
    for (std::size_t j = 3; j < pairs.size(); ++j)
      EXPECT_EQ((*result.eta)[j - 3], oracle::chart_cross_ratio({pairs[0], pairs[1], pairs[2]}, pairs[j]));
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(LineRestriction, SingularLines) {
  const StandardParameter lambda(2, 4, {{2, 3}});
  // Passes through the intersection of t1 = 0 and t2 = 0.
  const V through_vertex{1, 1, 0};
  EXPECT_THROW(restrict_to_line(lambda, through_vertex), PreconditionError);
  const auto result = restrict_to_line(lambda, through_vertex, true);
  EXPECT_TRUE(result.singular);
  EXPECT_FALSE(result.parameter);
  EXPECT_THROW(restrict_to_line(lambda, V{2, 3, 1}, true), PreconditionError);
  EXPECT_THROW(restrict_to_line(lambda, V{0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(restrict_to_line(StandardParameter(1, 3, {{2}}), V{1, 2, 3}), std::invalid_argument);
}

TEST(LineRestriction, SmallestCaseHasOneValue) {
  const auto result = restrict_to_line(StandardParameter(2, 3, {}), V{2, 3, 5});
  ASSERT_TRUE(result.eta);
  EXPECT_EQ(result.eta->size(), 1u);
  EXPECT_EQ((*result.eta)[0], Rational(3 * 3) / (2 * 2));
}

TEST(TangentConic, CoefficientsAndTangency) {
  const auto conic = tangent_conic(1);
  EXPECT_EQ(conic.coefficients(), (std::array<Rational, 6>{4, 1, 1, 4, 4, -2}));
  for (const Rational& a : {Rational(1), Rational(3), Rational(-1) / 2, Rational(5) / 7}) {
    const auto q = tangent_conic(a);
    for (const auto& line : dual_points_of(StandardParameter(2, 3, {})))
      EXPECT_TRUE(is_tangent(line, q)) << a.to_string();
    // A tangency point lies on the conic and on its line.
    const auto p = tangency_point(V{1, 1, 1}, q);
    EXPECT_TRUE(q.evaluate(p).is_zero());
    EXPECT_TRUE((p[0] + p[1] + p[2]).is_zero());
  }
  EXPECT_FALSE(is_tangent(V{1, 2, 3}, conic));
  EXPECT_THROW(tangency_point(V{1, 2, 3}, conic), PreconditionError);
  EXPECT_THROW(tangent_conic(0), PreconditionError);
  EXPECT_THROW(tangent_conic(2), PreconditionError);
  EXPECT_THROW(Conic::create({1, 0, 0, 0, 0, 0}), PreconditionError);
}

TEST(TangentConic, TangentLineFamily) {
  for (const Rational& a : {Rational(1), Rational(3), Rational(-4) / 3}) {
    const auto q = tangent_conic(a);
    EXPECT_EQ(projective_normalize(tangent_line(a, 0)), (V{0, 1, 0}));
    EXPECT_EQ(projective_normalize(tangent_line(a, 1)), (V{1, 1, 1}));
    for (int t = -5; t <= 5; ++t) {
      const auto dual = q.adjugate();
      if ((dual(0, 1) + dual(0, 2) * Rational(t)).is_zero()) continue;
      EXPECT_TRUE(is_tangent(tangent_line(a, t), q));
    }
  }
}

TEST(ConicCurve, ParametersMatchTangentCoordinate) {
  // Lines (s, 1, t) on the dual conic are parametrized by t, with t1 = 0 at
  // the t where the pencil through e_1 is tangent, t2 = 0 at t = 0, t3 = 0
  // at infinity and t1 + t2 + t3 = 0 at t = 1.
  for (const Rational& a : {Rational(1), Rational(3), Rational(-1) / 2}) {
    const auto dual = tangent_conic(a).adjugate();
    const Rational t0 = -dual(0, 1) / dual(0, 2);
    const std::vector<V> anchors{{t0, 1}, {0, 1}, {1, 0}};
    std::vector<Rational> ts{Rational(2), Rational(-3), Rational(5) / 4};
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> expected{oracle::chart_cross_ratio(anchors, {1, 1})};
    for (const auto& t : ts) {
      if (t == t0) continue;
      const auto line = tangent_line(a, t);
      rows.push_back({line[0] / line[2], line[1] / line[2]});
      expected.push_back(oracle::chart_cross_ratio(anchors, {t, 1}));
    }
    const StandardParameter lambda(2, 3 + static_cast<int>(rows.size()), rows);
    if (!is_standard_parameter(lambda)) continue;
    const auto curve = conic_curve_parameters(a, lambda);
    EXPECT_EQ(curve.eta, expected) << a.to_string();
    EXPECT_EQ(curve.eta.size(), rows.size() + 1);
    EXPECT_TRUE(is_standard_parameter(curve.parameter));
  }
}

TEST(ConicCurve, SmallestCaseAndErrors) {
  const auto curve = conic_curve_parameters(1, StandardParameter(2, 3, {}));
  EXPECT_EQ(curve.eta.size(), 1u);
  EXPECT_EQ(curve.tangency_points.size(), 4u);
  try {
    conic_curve_parameters(1, StandardParameter(2, 4, {{2, 3}}));
    ADD_FAILURE() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos);
  }
}

TEST(ConicCurve, AnchorChoiceGivesIsomorphicCurve) {
  const Rational a = 3;
  const auto lambda = StandardParameter(
      2, 5, {{tangent_line(a, 2)[0] / Rational(2), Rational(1) / 2}, {tangent_line(a, -3)[0] / Rational(-3), Rational(-1) / 3}});
  ASSERT_TRUE(is_standard_parameter(lambda));
  const auto curve = conic_curve_parameters(a, lambda);
  const auto& p = curve.tangency_points;
  const auto lines = dual_points_of(lambda);
  // Same points with anchors 2, 4, 5 and the rest in order.
  std::vector<std::vector<Rational>> table;
  for (std::size_t j : {0u, 2u, 5u})
    table.push_back({conic_cross_ratio(p[1], lines[1], {p[1], p[3], p[4]}, p[j])});
  const StandardParameter reanchored(1, 5, table);
  ASSERT_TRUE(is_standard_parameter(reanchored));
  EXPECT_TRUE(are_isomorphic(curve.parameter, reanchored).isomorphic);
}
