#pragma once

#include <optional>
#include <string>
#include <vector>

#include "occ/series.hpp"

namespace occ {

enum class LawKind { additive, multiplicative, universal, custom };

std::string law_name(LawKind kind);
LawKind parse_law_kind(std::string_view name);

/// Logarithm coefficient generators m_1..m_count (degree -i, never truncated).
std::vector<Variable> generator_variables(int count);
std::string generator_name(int i);

/// A formal group law F(x, y). The law context holds the coefficient
/// generators (if any) followed by the nilpotent variables x and y.
class FormalGroupLaw {
 public:
  static FormalGroupLaw make(LawKind kind, int truncation,
                             CoefficientMode mode = CoefficientMode::rationals);
  /// Hand-built law; `series` must live in a context containing nilpotent x
  /// and y, all other variables being non-nilpotent coefficients.
  static FormalGroupLaw custom(const Series &series);

  LawKind kind() const { return kind_; }
  std::string name() const { return law_name(kind_); }
  const ContextPtr &context() const { return context_; }
  const Series &series() const { return series_; }
  int truncation() const { return context_->truncation(); }
  CoefficientMode mode() const { return context_->mode(); }
  /// Coefficient variables of the law context.
  std::vector<Variable> coefficient_variables() const;

  /// Same law at another truncation. Named laws are rebuilt; custom laws
  /// are treated as exact polynomials and re-embedded.
  FormalGroupLaw with_truncation(int truncation) const;

  /// Context for class computations: coefficient generators first, then
  /// `classes`. Universal laws get m_1..m_generators, by default
  /// truncation + 4 to leave headroom for pushforwards.
  ContextPtr class_context(const std::vector<Variable> &classes, int truncation,
                           int generators = -1) const;

  /// Coefficient a_ij of x^i y^j as a series in the coefficient variables.
  Series coefficient(int i, int j) const;
  /// iota(x) with F(x, iota(x)) = 0, in the law context.
  const Series &inverse() const { return inverse_; }
  /// The n-series [n](x) in the law context.
  Series nseries(int n) const;
  /// Logarithm l(x) with l(F(x,y)) = l(x) + l(y).
  Series log() const;

  /// F(a, b) for series living in a common context whose truncation does
  /// not exceed the law's.
  Series apply(const Series &a, const Series &b) const;
  /// iota(a).
  Series apply_inverse(const Series &a) const;
  /// [n](a).
  Series apply_nseries(int n, const Series &a) const;

  bool operator==(const FormalGroupLaw &other) const;

 private:
  FormalGroupLaw(LawKind kind, Series series, Series source);
  void check_target(const ContextPtr &target) const;

  LawKind kind_;
  ContextPtr context_;
  Series series_;
  Series inverse_;
  Series source_;  // custom laws: the polynomial as given, untruncated
};

struct AxiomResult {
  std::string axiom;
  bool applicable = true;
  bool pass = true;
  std::string first_failure;  // e.g. "(2,0)"
};

std::vector<AxiomResult> check_axioms(const FormalGroupLaw &law);

/// Univariate series with series coefficients, sum_k coeffs[k] z^k, at a
/// nilpotent argument; coefficients must live in the argument's context.
Series compose_series(const std::vector<Series> &coeffs, const Series &argument);

}  // namespace occ
