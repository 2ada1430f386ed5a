#include "occ/chern.hpp"

#include "occ/error.hpp"

namespace occ {

namespace {

void check_root(const Series &root) {
  if (root.is_zero()) return;
  if (*root.min_weight() < 1)
    throw Error(Errc::non_nilpotent_substitution, "root " + root.to_string());
  if (*root.min_weight() != 1)
    throw Error(Errc::invalid_argument, "root without linear part: " + root.to_string());
}

}  // namespace

SplitBundle::SplitBundle(const FormalGroupLaw &law, ContextPtr context,
                         std::vector<Series> roots)
    : law_(law.with_truncation(context->truncation())),
      context_(std::move(context)),
      roots_(std::move(roots)) {
  for (const auto &r : roots_) {
    if (!same_context(r.context(), context_))
      throw Error(Errc::incompatible_contexts, "root outside bundle context");
    check_root(r);
  }
}

SplitBundle SplitBundle::rebased(const ContextPtr &context) const {
  std::vector<Series> moved;
  for (const auto &r : roots_) moved.push_back(r.embed(context));
  return SplitBundle(law_, context, std::move(moved));
}

Series chern(int k, const SplitBundle &bundle) {
  if (k < 0 || k > bundle.rank())
    throw Error(Errc::out_of_range, "Chern class index " + std::to_string(k) +
                                        " for rank " + std::to_string(bundle.rank()));
  return elementary_symmetric(bundle.context(), bundle.roots(), k);
}

Series total_chern(const SplitBundle &bundle) {
  Series c = Series::constant(bundle.context(), 1);
  for (const auto &r : bundle.roots()) c *= Series::constant(bundle.context(), 1) + r;
  return c;
}

Series euler(const SplitBundle &bundle) {
  Series e = Series::constant(bundle.context(), 1);
  for (const auto &r : bundle.roots()) e *= r;
  return e;
}

SplitBundle dual(const SplitBundle &bundle) {
  std::vector<Series> roots;
  for (const auto &r : bundle.roots()) roots.push_back(bundle.law().apply_inverse(r));
  return SplitBundle(bundle.law(), bundle.context(), std::move(roots));
}

SplitBundle twist_by_line(const SplitBundle &bundle, const Series &line) {
  if (!line.is_zero() && *line.min_weight() < 1)
    throw Error(Errc::non_nilpotent_substitution, "line class " + line.to_string());
  std::vector<Series> roots;
  for (const auto &r : bundle.roots()) roots.push_back(bundle.law().apply(r, line));
  return SplitBundle(bundle.law(), bundle.context(), std::move(roots));
}

SplitBundle direct_sum(const SplitBundle &a, const SplitBundle &b) {
  if (!(a.law() == b.law())) throw Error(Errc::law_mismatch, "direct sum");
  if (!same_context(a.context(), b.context()))
    throw Error(Errc::incompatible_contexts, "direct sum");
  std::vector<Series> roots = a.roots();
  roots.insert(roots.end(), b.roots().begin(), b.roots().end());
  return SplitBundle(a.law(), a.context(), std::move(roots));
}

std::vector<Series> pb_relation_poly(const SplitBundle &bundle, std::string_view t) {
  for (const auto &r : bundle.roots())
    if (r.mentions(t))
      throw Error(Errc::variable_collision, "'" + std::string(t) + "' occurs in a root");
  SplitBundle d = dual(bundle);
  const int r = bundle.rank();
  std::vector<Series> coeffs;
  for (int i = 0; i <= r; ++i) {
    Series c = chern(r - i, d);
    coeffs.push_back(i % 2 ? -c : c);
  }
  return coeffs;
}

}  // namespace occ
