#pragma once

// The generalized Fermat manifold M = M_n^k(Lambda) in P^n, cut out by n-d
// diagonal forms of degree k, together with its group H_0 = Z_k^n of
// diagonal automorphisms.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfm/arrangement.hpp"
#include "gfm/cyclotomic.hpp"
#include "gfm/matrix.hpp"
#include "gfm/modaction.hpp"

namespace gfm {

struct GfmType {
  int d;
  int k;
  int n;

  /// Throws std::invalid_argument unless d >= 1, k >= 2, n >= d+1.
  void validate() const;
  std::string to_string() const;  // "(d;k,n)"
  friend bool operator==(const GfmType&, const GfmType&) = default;
};

/// phi_1^{m_1} ... phi_{n+1}^{m_{n+1}}, acting by x_j -> w^{m_j} x_j. Stored
/// with the last exponent shifted to 0, since adding a constant to every
/// exponent gives the same projective map.
class GroupElement {
 public:
  /// Reduces every exponent mod k and canonicalizes. Needs k >= 2 and at
  /// least two exponents.
  static GroupElement from_exponents(int k, const std::vector<long>& exponents);
  static GroupElement identity(int k, int n);
  /// The canonical generator phi_j, 1 <= j <= n+1.
  static GroupElement generator(int k, int n, int j);

  int k() const noexcept { return k_; }
  int n() const noexcept { return static_cast<int>(exponents_.size()) - 1; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }

  bool is_identity() const;
  GroupElement inverse() const;
  GroupElement power(long e) const;
  std::string to_string() const;  // "(1,1,2,0)"

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  GroupElement(int k, std::vector<int> exponents) : k_(k), exponents_(std::move(exponents)) {}
  int k_;
  std::vector<int> exponents_;
};

/// Sum over the variables of coefficient * x_var^k; variable indices are
/// 1-based and increasing.
using SparseForm = std::vector<std::pair<int, Rational>>;

class EquationSystem {
 public:
  EquationSystem(int d, int k, Matrix<Rational> coefficients);

  int d() const noexcept { return d_; }
  int k() const noexcept { return k_; }
  int n() const noexcept { return static_cast<int>(coefficients_.cols()) - 1; }
  /// (n-d) x (n+1); entry (i, j) multiplies x_{j+1}^k in form i.
  const Matrix<Rational>& coefficient_matrix() const noexcept { return coefficients_; }
  std::vector<SparseForm> forms() const;
  /// One "... = 0" line per form, terms by increasing variable index.
  std::string to_text() const;

 private:
  int d_;
  int k_;
  Matrix<Rational> coefficients_;
};

/// Assembles the forms from a lambda table without checking general
/// position: x_1^k + ... + x_{d+2}^k and
/// lambda_{i,1} x_1^k + ... + lambda_{i,d} x_d^k + x_{d+1}^k + x_{d+2+i}^k.
EquationSystem build_equations(int d, int k, const std::vector<std::vector<Rational>>& table);

/// Equations of M_n^k(Lambda). Throws PreconditionError if Lambda is not in
/// X_{n,d}.
EquationSystem equations(const StandardParameter& parameter, int k);

/// All (n-d) x (n-d) minors of the coefficient matrix are nonzero. The matrix
/// is a Gale dual of the dual-point matrix up to column signs, so this holds
/// exactly when the branch arrangement is in general position, which makes M
/// a smooth complete intersection.
bool smoothness_certificate(const EquationSystem& system);

/// phi_1, ..., phi_{n+1}.
std::vector<GroupElement> canonical_generators(int k, int n);

struct FixedComponent {
  int level;
  /// 1-based indices j with m_j = level.
  std::vector<int> indices;
  /// #indices + d - n - 1.
  int dimension;
  /// #indices - 1; the component is a manifold of type (dimension; k, n_prime).
  int n_prime;
  /// k^{n_prime} when dimension = 0.
  std::optional<Integer> point_count;
};

struct FixedLocusReport {
  GroupElement element;
  GfmType type;
  std::vector<FixedComponent> components;
};

FixedLocusReport fixed_locus(const GroupElement& element, const GfmType& type);
bool acts_freely(const GroupElement& element, const GfmType& type);

struct FreeActionReport {
  bool free;
  /// A nontrivial element with fixed points.
  std::optional<GroupElement> offending;
  std::uint64_t order;
};

/// Enumerates the subgroup generated by `generators` (throws BudgetExceeded
/// if it grows beyond `budget` elements) and checks every nontrivial element.
FreeActionReport subgroup_acts_freely(const std::vector<GroupElement>& generators,
                                      const GfmType& type,
                                      std::uint64_t budget = kDefaultBudget);

/// Necessary condition for a subgroup of index p^r of Z_p^n to act freely
/// when d >= 2: n+1 <= (p^r - 1)/(p - 1).
bool bound_feasible(int p, int r, int n);

/// Generators of the kernel of m -> sum c_j m_j (mod p) on H = Z_p^n, with
/// elements written by their first n exponents. `c` has length n and is not
/// identically zero mod p; p must be prime.
std::vector<GroupElement> functional_kernel_generators(int p, const std::vector<int>& c);

/// Whether x -> A x preserves M: A must be monomial and every transformed
/// form must lie in the span of the defining forms. Entries live in
/// Q(zeta_m) for a common order m. Throws std::invalid_argument for a
/// singular or wrongly sized A.
bool is_linear_automorphism(const Matrix<CyclotomicScalar>& a, const StandardParameter& parameter,
                            int k);

struct AutomorphismOrder {
  /// stabilizer_order * k^n.
  Integer order;
  /// Permutations of the branch hyperplanes realized by projective maps.
  std::uint64_t stabilizer_order;
  /// Part of the stabilizer acting trivially on X_{n,d}.
  std::uint64_t kernel_order;
  /// stabilizer_order / kernel_order, the stabilizer in G_{n,d}.
  std::uint64_t image_order;
  Integer k_power;
  /// The count is |Lin(M)|; Aut(M) is larger (K3 pairs, or d = 1 with
  /// (k-1)(n-1) <= 2).
  bool linear_only;
};

AutomorphismOrder automorphism_order(const StandardParameter& parameter, int k,
                                     std::uint64_t budget = kDefaultBudget);

/// k^((n-d)(d+1) - n).
Integer fiber_product_components(const GfmType& type);

struct LowNClassification {
  int d;
  int n;
  bool exists;
  std::string description;
};

/// 2 <= n <= d. Throws PreconditionError for n >= d+1 and
/// std::invalid_argument for n < 2.
LowNClassification classify_low_n(int d, int n);

}  // namespace gfm
