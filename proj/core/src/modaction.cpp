#include "gfm/modaction.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gfm/errors.hpp"

namespace gfm {

namespace {

void require_budget(int n, std::uint64_t budget) {
  const std::uint64_t required = factorial(static_cast<unsigned>(n + 1));
  if (required > budget) throw BudgetExceeded("enumeration of S_" + std::to_string(n + 1), required, budget);
}

// Calls fn on every permutation whose first image is `first`, in
// lexicographic order. fn returns false to stop early.
template <typename Fn>
void for_each_with_first(std::size_t size, int first, Fn&& fn) {
  std::vector<int> rest;
  for (int v = 1; v <= static_cast<int>(size); ++v)
    if (v != first) rest.push_back(v);
  std::vector<int> images(size);
  images[0] = first;
  do {
    std::copy(rest.begin(), rest.end(), images.begin() + 1);
    if (!fn(Permutation::from_images(images))) return;
  } while (std::next_permutation(rest.begin(), rest.end()));
}

struct Partial {
  std::set<StandardParameter> orbit;
  std::vector<Permutation> stabilizer;
};

}  // namespace

StandardParameter act(const Permutation& eta, const StandardParameter& parameter) {
  const auto size = static_cast<std::size_t>(parameter.n()) + 1;
  if (eta.size() != size)
    throw std::invalid_argument("permutation acts on " + std::to_string(eta.size()) +
                                " letters, parameter has " + std::to_string(size) + " hyperplanes");
  if (parameter.n() == parameter.d() + 1) return parameter;
  const auto points = dual_points_of(parameter);
  std::vector<DualPoint> reordered(size);
  // Position eta(j) receives hyperplane j.
  for (std::size_t j = 0; j < size; ++j)
    reordered[static_cast<std::size_t>(eta(static_cast<int>(j) + 1) - 1)] = points[j];
  return normalize_points(reordered, parameter.d()).parameter;
}

StandardParameter act_sigma1(const StandardParameter& parameter) {
  auto rows = parameter.rows();
  if (parameter.d() >= 2) {
    for (auto& row : rows) std::swap(row[0], row[1]);
  } else {
    for (auto& row : rows) {
      if (row[0].is_zero()) throw PreconditionError("parameter is not in general position");
      row[0] = row[0].inverse();
    }
  }
  return StandardParameter(parameter.d(), parameter.n(), std::move(rows));
}

StandardParameter act_sigma2(const StandardParameter& parameter) {
  const auto& in = parameter.rows();
  if (in.empty()) return parameter;
  const auto d = static_cast<std::size_t>(parameter.d());
  const auto m = in.size();
  const auto& last = in[m - 1];
  const Rational& pivot = last[d - 1];

  auto quotient = [](const Rational& num, const Rational& den) {
    if (den.is_zero()) throw PreconditionError("parameter is not in general position");
    return num / den;
  };

  std::vector<std::vector<Rational>> out(m, std::vector<Rational>(d));
  out[0][0] = quotient(pivot, pivot - 1);
  for (std::size_t j = 1; j < d; ++j)
    out[0][j] = quotient(pivot * (last[j - 1] - 1), last[j - 1] * (pivot - 1));
  for (std::size_t i = 1; i < m; ++i) {
    const auto& prev = in[i - 1];
    out[i][0] = quotient(pivot, pivot - prev[d - 1]);
    for (std::size_t j = 1; j < d; ++j)
      out[i][j] = quotient(pivot * (last[j - 1] - prev[j - 1]), last[j - 1] * (pivot - prev[d - 1]));
  }
  return StandardParameter(parameter.d(), parameter.n(), std::move(out));
}

OrbitReport orbit_and_stabilizer(const StandardParameter& parameter, std::uint64_t budget) {
  require_budget(parameter.n(), budget);
  if (!is_standard_parameter(parameter)) throw PreconditionError("parameter is not in X_{n,d}");
  const auto size = static_cast<std::size_t>(parameter.n()) + 1;

  std::vector<std::future<Partial>> tasks;
  for (int first = 1; first <= static_cast<int>(size); ++first) {
    tasks.push_back(std::async(std::launch::async, [&parameter, size, first] {
      Partial partial;
      for_each_with_first(size, first, [&](const Permutation& eta) {
        auto image = act(eta, parameter);
        if (image == parameter) partial.stabilizer.push_back(eta);
        partial.orbit.insert(std::move(image));
        return true;
      });
      return partial;
    }));
  }

  std::set<StandardParameter> orbit;
  std::vector<Permutation> stabilizer;
  for (auto& task : tasks) {
    auto partial = task.get();
    orbit.merge(partial.orbit);
    stabilizer.insert(stabilizer.end(), partial.stabilizer.begin(), partial.stabilizer.end());
  }
  std::sort(stabilizer.begin(), stabilizer.end());
  return {parameter,
          std::vector<StandardParameter>(orbit.begin(), orbit.end()),
          std::move(stabilizer),
          factorial(static_cast<unsigned>(size)),
          parameter.n() == 3 && parameter.d() == 1};
}

std::vector<Permutation> klein_four_kernel() {
  return {Permutation::identity(4),
          Permutation::from_images({2, 1, 4, 3}),
          Permutation::from_images({3, 4, 1, 2}),
          Permutation::from_images({4, 3, 2, 1})};
}

std::vector<Permutation> kernel_of_action(int n, int d, int samples, std::uint64_t seed,
                                          std::uint64_t budget) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (n == 3 && d == 1) return klein_four_kernel();
  if (n < d + 2) throw PreconditionError("kernel sampling needs n >= d + 2");
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  require_budget(n, budget);

  std::mt19937_64 rng(seed);
  std::vector<StandardParameter> points;
  for (int s = 0; s < samples; ++s) points.push_back(random_standard_parameter(n, d, rng));

  std::vector<Permutation> kernel;
  for (auto& eta : all_permutations(static_cast<std::size_t>(n) + 1)) {
    const bool trivial = std::all_of(points.begin(), points.end(),
                                     [&](const StandardParameter& p) { return act(eta, p) == p; });
    if (trivial) kernel.push_back(std::move(eta));
  }
  return kernel;
}

bool is_exceptional_type(int d, int k, int n) {
  return d == 2 && ((k == 2 && n == 5) || (k == 4 && n == 3));
}

IsomorphismResult are_isomorphic(const StandardParameter& first, const StandardParameter& second,
                                 std::optional<int> k, std::uint64_t budget) {
  if (first.d() != second.d() || first.n() != second.n())
    throw std::invalid_argument("parameters belong to different spaces X_{n,d}");
  require_budget(first.n(), budget);
  if (!is_standard_parameter(first) || !is_standard_parameter(second))
    throw PreconditionError("parameter is not in X_{n,d}");

  const bool linear = k.has_value() && is_exceptional_type(first.d(), *k, first.n());
  const auto size = static_cast<std::size_t>(first.n()) + 1;
  std::optional<Permutation> witness;
  for (int lead = 1; lead <= static_cast<int>(size) && !witness; ++lead) {
    for_each_with_first(size, lead, [&](const Permutation& eta) {
      if (act(eta, first) == second) {
        witness = eta;
        return false;
      }
      return true;
    });
  }
  return {witness.has_value(), witness, linear};
}

StandardParameter canonical_representative(const StandardParameter& parameter, std::uint64_t budget) {
  const auto report = orbit_and_stabilizer(parameter, budget);
  return report.orbit.front();
}

}  // namespace gfm
