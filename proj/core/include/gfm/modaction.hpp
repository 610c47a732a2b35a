#pragma once

// The symmetric group S_{n+1} acting on X_{n,d} by relabelling the
// hyperplanes and renormalizing. Orbits classify generalized Fermat
// manifolds of type (d;k,n) up to isomorphism; stabilizers give their reduced
// automorphism groups.

#include <cstdint>
#include <optional>
#include <vector>

#include "gfm/arrangement.hpp"
#include "gfm/permutation.hpp"

namespace gfm {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Standard parameter of the reordered arrangement
/// (L_{eta^-1(1)}(Lambda), ..., L_{eta^-1(n+1)}(Lambda)).
StandardParameter act(const Permutation& eta, const StandardParameter& parameter);

/// Closed form of act((1 2), .): swaps the first two columns when d >= 2 and
/// inverts every entry when d = 1.
StandardParameter act_sigma1(const StandardParameter& parameter);

/// Closed form of act((1 2 ... n+1), .). Identity on the one-point space
/// n = d+1.
StandardParameter act_sigma2(const StandardParameter& parameter);

struct OrbitReport {
  StandardParameter base;
  /// Distinct parameters of the orbit, sorted.
  std::vector<StandardParameter> orbit;
  /// Subgroup of S_{n+1} fixing the base point, sorted. Not reduced modulo
  /// the kernel of the action.
  std::vector<Permutation> stabilizer;
  /// (n+1)!
  std::uint64_t group_order;
  /// Set when (n,d) = (3,1), where the action has the Klein four-group as
  /// kernel; the effective stabilizer is then stabilizer/kernel.
  bool klein_kernel;
};

/// Full enumeration of S_{n+1}. Throws BudgetExceeded when (n+1)! > budget.
OrbitReport orbit_and_stabilizer(const StandardParameter& parameter,
                                 std::uint64_t budget = kDefaultBudget);

/// Permutations acting trivially on `samples` random parameters (seeded).
/// (n,d) = (3,1) returns the Klein four-group without sampling. Requires
/// n >= d+2 otherwise.
std::vector<Permutation> kernel_of_action(int n, int d, int samples, std::uint64_t seed,
                                          std::uint64_t budget = kDefaultBudget);

/// The proven kernel {e, (12)(34), (13)(24), (14)(23)} for (n,d) = (3,1).
std::vector<Permutation> klein_four_kernel();

struct IsomorphismResult {
  bool isomorphic;
  /// A permutation with act(witness, first) == second.
  std::optional<Permutation> witness;
  /// (d;k,n) is (2;2,5) or (2;4,3): orbit equality then classifies the
  /// manifolds only up to linear isomorphism.
  bool linear_category;
};

/// Orbit membership test. `k` is only used to tag the exceptional K3 types.
IsomorphismResult are_isomorphic(const StandardParameter& first, const StandardParameter& second,
                                 std::optional<int> k = std::nullopt,
                                 std::uint64_t budget = kDefaultBudget);

/// Lexicographically smallest element of the orbit.
StandardParameter canonical_representative(const StandardParameter& parameter,
                                           std::uint64_t budget = kDefaultBudget);

/// True for the two K3 types where Aut(M) is infinite.
bool is_exceptional_type(int d, int k, int n);

}  // namespace gfm
