#pragma once

// Numerical invariants of a generalized Fermat manifold of type (d;k,n):
// dimensions of twisted sections, plurigenera, genera and the Kodaira
// dimension. They depend only on the type, not on Lambda.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gfm/fermat_group.hpp"
#include "gfm/rational.hpp"

namespace gfm {

/// binom(a, b), zero when b < 0 or a < b (including negative a).
Integer binomial(long a, long b);

/// h^0(M, O_M(r)).
Integer h0_twist(const GfmType& type, long r);

/// Coefficient of t^r in (1 - t^k)^(n-d) / (1 - t)^(n+1); zero for r < 0.
Integer hilbert_series_coefficient(const GfmType& type, long r);

/// r_1 = (n-d)k - n - 1, with K_M = O_M(r_1).
long canonical_degree(const GfmType& type);

/// P_m = h0_twist(m r_1). Needs m >= 1.
Integer plurigenus(const GfmType& type, long m);

struct KodairaDimension {
  /// Empty for -infinity.
  std::optional<int> value;
  std::string to_string() const;  // "-inf", "0", "2"
  friend bool operator==(const KodairaDimension&, const KodairaDimension&) = default;
};

KodairaDimension kodaira_dimension(const GfmType& type);

enum class Classification { negative_kodaira, rational, calabi_yau, k3, general_type };

Classification classify(const GfmType& type);
std::string to_string(Classification label);  // "negative-kodaira", "rational", "Calabi-Yau", "K3", "general-type"

/// k^(n-d) r_1^d / d!, the leading coefficient of m -> P_m. Throws
/// PreconditionError when r_1 <= 0.
Rational leading_coefficient(const GfmType& type);

/// h^d(M, O_M(r)) = h0_twist(r_1 - r).
Integer top_cohomology(const GfmType& type, long r);

struct InvariantReport {
  GfmType type;
  long r1;
  KodairaDimension kodaira;
  /// p_a = p_g = h^0(O(r_1)).
  Integer pa_pg;
  std::map<long, Integer> plurigenera;
  Classification label;
  std::string vanishing_note;
};

InvariantReport invariant_report(const GfmType& type, const std::vector<long>& plurigenera = {1, 2, 3});

}  // namespace gfm
