#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "occ/context.hpp"
#include "occ/rational.hpp"

namespace occ {

using Exponents = std::vector<std::uint8_t>;

struct Term {
  Exponents exponents;
  Rational coeff;
  int weight = 0;  // nilpotent weight, cached
};

/// Sparse multivariate power series truncated at the context's nilpotent
/// weight N. Terms are kept in canonical order: ascending nilpotent weight,
/// then exponent vectors in descending lexicographic order.
class Series {
 public:
  explicit Series(ContextPtr context);

  static Series constant(ContextPtr context, const Rational &value);
  static Series variable(ContextPtr context, std::string_view name);
  static Series monomial(ContextPtr context, Exponents exponents,
                         const Rational &coeff = 1);
  /// Merges duplicate monomials, drops zeros and terms above the truncation.
  static Series from_terms(ContextPtr context, std::vector<Term> terms);

  const ContextPtr &context() const { return context_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational constant_term() const;
  Rational coefficient(const Exponents &exponents) const;
  /// Coefficient of the monomial given by variable name/exponent pairs.
  Rational coefficient(const std::map<std::string, int> &monomial) const;

  /// Lowest/highest nilpotent weight among the terms; nullopt when zero.
  std::optional<int> min_weight() const;
  std::optional<int> max_weight() const;

  /// Homogeneous part of the given nilpotent weight.
  Series component(int weight) const;
  Series truncated(int weight) const;
  /// Graded degree when every term has the same degree.
  std::optional<int> homogeneous_degree() const;
  /// True when some term has a positive exponent of the variable.
  bool mentions(std::string_view name) const;
  int degree_in(std::string_view name) const;

  /// Re-expresses the series in another context by matching variable
  /// names, truncating at the destination's N.
  Series embed(const ContextPtr &destination) const;

  Series operator-() const;
  Series &operator+=(const Series &other);
  Series &operator-=(const Series &other);
  Series &operator*=(const Series &other);
  Series scaled(const Rational &factor) const;
  Series pow(unsigned exponent) const;

  friend Series operator+(Series a, const Series &b) { return a += b; }
  friend Series operator-(Series a, const Series &b) { return a -= b; }
  friend Series operator*(const Series &a, const Series &b);
  friend bool operator==(const Series &a, const Series &b);

  /// Canonical text form, e.g. "1 - x^2" or "x + y - 2*m1*x*y".
  std::string to_string() const;

 private:
  ContextPtr context_;
  std::vector<Term> terms_;
};

Series mul(const Series &a, const Series &b);

/// Terms whose exponents of the named variables match exactly, with those
/// exponents removed; i.e. the coefficient of the monomial as a series in
/// the remaining variables.
Series slice(const Series &s, const std::map<std::string, int> &monomial);

/// Simultaneous substitution. Variables without an image are mapped by name
/// into the destination context.
using Assignment = std::map<std::string, Series, std::less<>>;
Series substitute(const Series &target, const Assignment &assignment);
Series substitute(const Series &target, const Assignment &assignment,
                  const ContextPtr &destination);

Series invert_unit(const Series &a);

/// Quotient q with q * den = num up to truncation. The quotient is only
/// determined up to weight N - (lowest weight of den).
Series exact_divide(const Series &num, const Series &den);

/// Rewrites a series symmetric in `roots` as a polynomial in `targets`,
/// where targets[k-1] stands for the k-th elementary symmetric polynomial.
Series symmetric_reduce(const Series &p, const std::vector<std::string> &roots,
                        const std::vector<std::string> &targets);

bool is_symmetric(const Series &p, const std::vector<std::string> &roots);

/// k-th elementary symmetric polynomial of the given series (k >= 0).
Series elementary_symmetric(const ContextPtr &context,
                            std::span<const Series> values, int k);

/// Univariate series sum_k coeffs[k] z^k evaluated at a nilpotent argument.
Series compose_univariate(const std::vector<Rational> &coeffs,
                          const Series &argument);

}  // namespace occ
