#pragma once

#include <string_view>
#include <vector>

#include "occ/fgl.hpp"

namespace occ {

/// A vector bundle with a chosen splitting, given by its Chern roots.
class SplitBundle {
 public:
  /// Roots must live in `context`, have no terms of weight 0, and either be
  /// zero or have a nonzero weight-1 part. The law is brought to the
  /// context's truncation.
  SplitBundle(const FormalGroupLaw &law, ContextPtr context, std::vector<Series> roots);

  const FormalGroupLaw &law() const { return law_; }
  const ContextPtr &context() const { return context_; }
  const std::vector<Series> &roots() const { return roots_; }
  int rank() const { return static_cast<int>(roots_.size()); }

  /// Same bundle with roots re-expressed in another context.
  SplitBundle rebased(const ContextPtr &context) const;

 private:
  FormalGroupLaw law_;
  ContextPtr context_;
  std::vector<Series> roots_;
};

Series chern(int k, const SplitBundle &bundle);
Series total_chern(const SplitBundle &bundle);
Series euler(const SplitBundle &bundle);
SplitBundle dual(const SplitBundle &bundle);
SplitBundle twist_by_line(const SplitBundle &bundle, const Series &line);
SplitBundle direct_sum(const SplitBundle &a, const SplitBundle &b);

/// Coefficients of f(t) = sum_i (-1)^i c_{r-i}(E^dual) t^i for i = 0..r.
std::vector<Series> pb_relation_poly(const SplitBundle &bundle, std::string_view t);

}  // namespace occ
