#include <gtest/gtest.h>

#include <random>

#include "gfm/errors.hpp"
#include "gfm/modaction.hpp"
#include "oracles.hpp"

using namespace gfm;

namespace {

const StandardParameter kHarmonicBase(1, 3, {{2}});

}  // namespace

TEST(Act, IdentityAndOnePointSpace) {
  std::mt19937_64 rng(1);
  const auto lambda = random_standard_parameter(6, 2, rng);
  EXPECT_EQ(act(Permutation::identity(7), lambda), lambda);
  const StandardParameter point(2, 3, {});
  EXPECT_EQ(act(Permutation::long_cycle(4), point), point);
  EXPECT_THROW(act(Permutation::identity(5), lambda), std::invalid_argument);
}

TEST(Act, Sigma1Examples) {
  const StandardParameter lambda(2, 5, {{2, 5}, {3, 7}});
  const auto swapped = act_sigma1(lambda);
  EXPECT_EQ(swapped.column(0), (std::vector<Rational>{5, 7}));
  EXPECT_EQ(swapped.column(1), (std::vector<Rational>{2, 3}));
  EXPECT_EQ(act_sigma1(swapped), lambda);
  EXPECT_EQ(act(Permutation::transposition(6, 1, 2), lambda), swapped);
}

TEST(Act, Sigma2DOneNFour) {
  // lambda-hat_{1,1} = l/(l-1), lambda-hat_{2,1} = l/(l - lambda_{1,1}) with l = 3.
  const StandardParameter lambda(1, 4, {{2}, {3}});
  const StandardParameter expected(1, 4, {{Rational(3) / 2}, {3}});
  EXPECT_EQ(act_sigma2(lambda), expected);
  EXPECT_EQ(act(Permutation::long_cycle(5), lambda), expected);
}

TEST(Act, GeneratorsMatchRenormalizationOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 3;
    const int n = d + 2 + trial % 3;
    const auto lambda = random_standard_parameter(n, d, rng);
    const auto size = static_cast<std::size_t>(n) + 1;
    const auto s1 = Permutation::transposition(size, 1, 2);
    const auto s2 = Permutation::long_cycle(size);
    EXPECT_EQ(act_sigma1(lambda), oracle::reorder_and_renormalize(s1, lambda));
    EXPECT_EQ(act_sigma2(lambda), oracle::reorder_and_renormalize(s2, lambda));
    EXPECT_EQ(act(s1, lambda), act_sigma1(lambda));
    EXPECT_EQ(act(s2, lambda), act_sigma2(lambda));
    const auto eta = oracle::random_permutation(size, rng);
    EXPECT_EQ(act(eta, lambda), oracle::reorder_and_renormalize(eta, lambda));
  }
}

TEST(Act, HomomorphismLawAndClosure) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 3;
    const int n = d + 2 + trial % 4;
    const auto lambda = random_standard_parameter(n, d, rng);
    const auto size = static_cast<std::size_t>(n) + 1;
    const auto eta = oracle::random_permutation(size, rng);
    const auto rho = oracle::random_permutation(size, rng);
    const auto image = act(eta * rho, lambda);
    EXPECT_EQ(image, act(rho, act(eta, lambda)));
    EXPECT_TRUE(is_standard_parameter(image));
  }
}

TEST(Act, Sigma2Order) {
  std::mt19937_64 rng(31);
  for (auto [n, d] : {std::pair{4, 1}, {5, 2}, {6, 3}, {5, 1}}) {
    const auto lambda = random_standard_parameter(n, d, rng);
    auto current = lambda;
    for (int step = 1; step <= n + 1; ++step) {
      current = act_sigma2(current);
      if (step < n + 1) {
        EXPECT_NE(current, lambda) << n << d << " step " << step;
      }
    }
    EXPECT_EQ(current, lambda);
  }
}

TEST(Orbit, HarmonicQuadruple) {
  const auto report = orbit_and_stabilizer(kHarmonicBase);
  const std::vector<StandardParameter> expected{
      StandardParameter(1, 3, {{-1}}), StandardParameter(1, 3, {{Rational(1) / 2}}), kHarmonicBase};
  EXPECT_EQ(report.orbit, expected);
  EXPECT_EQ(report.stabilizer.size(), 8u);
  EXPECT_TRUE(report.klein_kernel);
  EXPECT_EQ(report.group_order, 24u);
  for (const auto& k : klein_four_kernel())
    EXPECT_TRUE(std::binary_search(report.stabilizer.begin(), report.stabilizer.end(), k));
}

TEST(Orbit, OnePointSpace) {
  const auto report = orbit_and_stabilizer(StandardParameter(2, 3, {}));
  EXPECT_EQ(report.orbit.size(), 1u);
  EXPECT_EQ(report.stabilizer.size(), 24u);
}

TEST(Orbit, GenericTrivialStabilizerAndOrbitStabilizer) {
  std::mt19937_64 rng(41);
  const auto lambda = random_standard_parameter(5, 2, rng);
  const auto report = orbit_and_stabilizer(lambda);
  EXPECT_EQ(report.stabilizer, std::vector<Permutation>{Permutation::identity(6)});
  EXPECT_EQ(report.orbit.size(), 720u);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 1 + trial % 2;
    const auto p = random_standard_parameter(d + 2 + trial % 3, d, rng);
    const auto r = orbit_and_stabilizer(p);
    EXPECT_EQ(r.orbit.size() * r.stabilizer.size(), r.group_order);
  }
}

TEST(Orbit, SymmetricParameters) {
  const auto report = orbit_and_stabilizer(StandardParameter(1, 3, {{-1}}));
  EXPECT_EQ(report.orbit.size(), 3u);
  const auto small = orbit_and_stabilizer(StandardParameter(1, 4, {{2}, {3}}));
  EXPECT_EQ(small.orbit.size() * small.stabilizer.size(), 120u);
}

TEST(Orbit, BudgetIsEnforced) {
  std::mt19937_64 rng(2);
  const auto lambda = random_standard_parameter(5, 1, rng);
  EXPECT_THROW(orbit_and_stabilizer(lambda, 100), BudgetExceeded);
  try {
    orbit_and_stabilizer(lambda, 100);
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.required(), 720u);
    EXPECT_EQ(e.budget(), 100u);
  }
}

TEST(Kernel, KleinGroupAndTrivialCases) {
  EXPECT_EQ(kernel_of_action(3, 1, 5, 1), klein_four_kernel());
  for (auto [n, d] : {std::pair{4, 1}, {5, 2}, {4, 2}})
    EXPECT_EQ(kernel_of_action(n, d, 20, 7), std::vector<Permutation>{Permutation::identity(static_cast<std::size_t>(n) + 1)});
  EXPECT_THROW(kernel_of_action(3, 2, 5, 1), PreconditionError);
}

TEST(Isomorphism, OrbitMembership) {
  const auto yes = are_isomorphic(kHarmonicBase, StandardParameter(1, 3, {{Rational(1) / 2}}));
  EXPECT_TRUE(yes.isomorphic);
  ASSERT_TRUE(yes.witness);
  EXPECT_EQ(act(*yes.witness, kHarmonicBase), StandardParameter(1, 3, {{Rational(1) / 2}}));
  EXPECT_FALSE(are_isomorphic(kHarmonicBase, StandardParameter(1, 3, {{5}})).isomorphic);

  std::mt19937_64 rng(8);
  const auto lambda = random_standard_parameter(5, 2, rng);
  const auto eta = oracle::random_permutation(6, rng);
  const auto result = are_isomorphic(lambda, act(eta, lambda), 2);
  EXPECT_TRUE(result.isomorphic);
  EXPECT_TRUE(result.linear_category);
  EXPECT_EQ(act(*result.witness, lambda), act(eta, lambda));
  EXPECT_FALSE(are_isomorphic(lambda, act(eta, lambda), 3).linear_category);
  EXPECT_THROW(are_isomorphic(lambda, kHarmonicBase), std::invalid_argument);
}

TEST(Canonical, MinimumOfOrbit) {
  EXPECT_EQ(canonical_representative(kHarmonicBase), StandardParameter(1, 3, {{-1}}));
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    const auto lambda = random_standard_parameter(4, 1, rng);
    const auto canon = canonical_representative(lambda);
    EXPECT_EQ(canonical_representative(canon), canon);
    const auto eta = oracle::random_permutation(5, rng);
    EXPECT_EQ(canonical_representative(act(eta, lambda)), canon);
  }
}
