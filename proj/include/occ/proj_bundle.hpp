#pragma once

#include <optional>
#include <string>
#include <vector>

#include "occ/chern.hpp"

namespace occ {

/// Omega(X)[t]/(f(t)) for a split bundle E of rank r over X. The total
/// context is the base context plus t, with truncation raised by r - 1 so
/// that pushforwards are exact up to the base truncation.
class ProjBundleRing {
 public:
  explicit ProjBundleRing(const SplitBundle &bundle, std::string t = "t");

  const SplitBundle &bundle() const { return bundle_; }
  int rank() const { return bundle_.rank(); }
  const std::string &variable() const { return t_; }
  const ContextPtr &base() const { return bundle_.context(); }
  const ContextPtr &total() const { return total_; }
  /// Coefficients of f(t), lowest degree first, in the total context.
  const std::vector<Series> &relation() const { return relation_; }
  Series relation_series() const;
  Series tautological() const { return Series::variable(total_, t_); }
  /// The law at the total truncation.
  const FormalGroupLaw &law() const { return law_; }

  /// Pullback of a base element.
  Series lift(const Series &base_element) const;
  /// Representative of t-degree below r.
  Series reduce(const Series &p) const;
  /// Residue pushforward to the base.
  Series pushforward(const Series &p) const;

 private:
  SplitBundle bundle_;
  std::string t_;
  ContextPtr total_;
  FormalGroupLaw law_;
  std::vector<Series> relation_;
};

/// Iterated projective bundles; level k+1 lives over the total ring of
/// level k.
class TowerRing {
 public:
  explicit TowerRing(ProjBundleRing bottom);

  std::size_t depth() const { return levels_.size(); }
  const ProjBundleRing &level(std::size_t k) const { return levels_[k]; }
  const ProjBundleRing &top() const { return levels_.back(); }
  /// Adds a level for a bundle over the current top total context.
  void push(const SplitBundle &bundle, std::string t);
  /// Pushes an element of the top total ring down to the bottom base.
  Series pushforward_all(Series p) const;

 private:
  std::vector<ProjBundleRing> levels_;
};

/// -sum_{i,j>=1} b_ij u^(i-1) iota(u)^(j-1), the class of P(L + O) when
/// e(L) = u.
Series pushforward_p1_formula(const FormalGroupLaw &law, const Series &u);

/// Classes [P_0], ..., [P_depth] of the tower P_{i+1} = P_{P_i}(M_i + O),
/// as series in the coefficient generators (context law.class_context({}, n)
/// with n = max(1, depth - 1)).
std::vector<Series> tower_classes(const FormalGroupLaw &law, int depth);

/// Same classes computed by building the tower level by level with
/// TowerRing; slower, used as a cross-check.
std::vector<Series> tower_classes_direct(const FormalGroupLaw &law, int depth);

/// (sum [P_{i+1}] u^i) / (sum [P_i] u^i).
Series class_of_proj_line(const FormalGroupLaw &law, const Series &u);

struct FglCheck {
  bool pass = false;
  Series p1, p2, p3, lhs, rhs;
  std::string first_failure;
};

/// Computes [P1], [P2], [P3] over a context with classes u1, u2 at
/// truncation n and compares both sides of the geometric law.
/// P1 = P(L2 + O), P2 = P(L1 + L1 L2 + O), P3 = P over P(L1 + L1 L2)
/// of O(-1) + O.
FglCheck geometric_fgl_check(const FormalGroupLaw &law, int n);

struct SequenceResult {
  std::vector<Series> values;
  std::optional<int> stabilization;  // first index of r consecutive zeros
};

/// Extends a seed by sum_j cs[j] a_{n+j} = 0 up to index `limit`.
SequenceResult sequence_extend(const std::vector<Series> &cs,
                               const std::vector<Series> &seed, int limit);

/// Context used for [P_i]-type coefficients: generators only.
ContextPtr coefficient_context(const FormalGroupLaw &law, int truncation);

}  // namespace occ
