#pragma once

#include "occ/proj_bundle.hpp"
#include "occ/report.hpp"

namespace occ {

/// m_i -> 0 (additive) or m_i -> 1/(i+1) (multiplicative).
struct SpecializationMap {
  LawKind target;

  static SpecializationMap to(LawKind target);
  Rational value(int i) const;
};

/// Substitutes the generator values; the result lives in the same context
/// with the generators removed.
Series specialize(const SpecializationMap &map, const Series &p);

/// sum_i (1 - iota(x_i)); multiplicative law.
Series ch_m(const SplitBundle &bundle);
/// sum_i exp(-x_i); additive law, rational mode.
Series ch_a(const SplitBundle &bundle);
/// prod_i x_i / (exp(-x_i) - 1); every factor has constant term -1.
Series todd(const SplitBundle &bundle);
/// iota(u) / log(1 - iota(u)) for the multiplicative law.
Series todd_prime(const FormalGroupLaw &law, const Series &u);

enum class Twist { t, t_prime };
/// t: 1 - exp(u). t_prime: log(1 - u).
Series twisted_c1(Twist mode, const Series &u);

/// Univariate factors, as coefficient lists up to degree n, so that the
/// identities can be checked after composing with twisted classes.
std::vector<Rational> todd_factor(int n);        // z / (exp(-z) - 1)
std::vector<Rational> todd_prime_factor(int n);  // z / log(1 - z)

/// binomial(k + r - 1, r - 1), polynomial in k.
Rational k_chi_oracle(int r, int k);

/// Multiplicative pushforward of [O(k)] = 1 - [-k](t) from P(O^r) to a point.
Rational k_pushforward(int r, int k);
/// Additive pushforward of exp(-k t) Td(L) with L + O = E^dual(-1).
Rational grr_lhs(int r, int k);

struct GrrResult {
  Rational lhs, rhs, oracle;
  bool pass() const { return lhs == oracle && rhs == oracle; }
};
GrrResult grr_check(int r, int k);

/// Universal computations specialized to the multiplicative law against
/// the same computations done directly with the multiplicative law.
Report conner_floyd_check(int n);

}  // namespace occ
