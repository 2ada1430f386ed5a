#include "occ/proj_bundle.hpp"

#include <algorithm>

#include "occ/error.hpp"

namespace occ {

namespace {

std::string formal_root(int i) { return "_x" + std::to_string(i + 1); }
std::string formal_class(int k) { return "_e" + std::to_string(k); }

ContextPtr total_context(const SplitBundle &bundle, const std::string &t) {
  if (!valid_identifier(t)) throw Error(Errc::invalid_argument, "bad variable name '" + t + "'");
  const auto &base = bundle.context();
  if (base->contains(t))
    throw Error(Errc::variable_collision, "'" + t + "' already in " + base->describe());
  int n = base->truncation() + std::max(0, bundle.rank() - 1);
  return base->extended({{t}})->with_truncation(n);
}

// W(a, b) with F(iota(a), b) = (b - a) W(a, b), in a context with the law's
// coefficients and variables _a, _b.
Series pair_unit(const FormalGroupLaw &law) {
  auto vars = law.coefficient_variables();
  vars.push_back({"_a"});
  vars.push_back({"_b"});
  auto ctx = Context::make(vars, law.truncation(), law.mode());
  Series a = Series::variable(ctx, "_a"), b = Series::variable(ctx, "_b");
  Series g = law.apply(law.apply_inverse(a), b);
  return exact_divide(g, b - a);
}

}  // namespace

ProjBundleRing::ProjBundleRing(const SplitBundle &bundle, std::string t)
    : bundle_(bundle),
      t_(std::move(t)),
      total_(total_context(bundle_, t_)),
      law_(bundle_.law().with_truncation(total_->truncation())) {
  for (auto &c : pb_relation_poly(bundle_.rebased(total_), t_)) relation_.push_back(std::move(c));
}

Series ProjBundleRing::relation_series() const {
  Series f(total_);
  Series t = tautological();
  for (std::size_t i = 0; i < relation_.size(); ++i)
    f += relation_[i] * t.pow(static_cast<unsigned>(i));
  return f;
}

Series ProjBundleRing::lift(const Series &base_element) const {
  if (!same_context(base_element.context(), base()))
    throw Error(Errc::incompatible_contexts, "lift expects a base element");
  return base_element.embed(total_);
}

Series ProjBundleRing::reduce(const Series &p) const {
  if (!same_context(p.context(), total_))
    throw Error(Errc::incompatible_contexts, "reduce expects an element of the total ring");
  const int r = rank();
  Series out = p;
  if (r == 0) return Series(total_);
  // f / c_r is monic since c_r = (-1)^r
  Series monic = relation_series().scaled(r % 2 ? -1 : 1);
  Series t = tautological();
  for (int k = out.degree_in(t_); k >= r; k = out.degree_in(t_)) {
    Series lead = slice(out, {{t_, k}});
    out -= lead * t.pow(static_cast<unsigned>(k - r)) * monic;
  }
  return out;
}

Series ProjBundleRing::pushforward(const Series &p) const {
  if (!same_context(p.context(), total_))
    throw Error(Errc::incompatible_contexts, "pushforward expects an element of the total ring");
  const int r = rank();
  if (r == 0 || p.is_zero()) return Series(base());
  const int n = base()->truncation();
  const int nw = n + r * (r - 1) / 2;
  FormalGroupLaw law = bundle_.law().with_truncation(nw + 1);

  // Working context: base variables, missing law coefficients, formal
  // roots and the elementary symbols that replace them.
  std::vector<Variable> vars;
  for (const auto &v : base()->variables()) vars.push_back(v);
  for (const auto &v : law.coefficient_variables())
    if (!base()->contains(v.name)) vars.push_back(v);
  std::vector<std::string> roots, classes;
  for (int i = 0; i < r; ++i) {
    roots.push_back(formal_root(i));
    vars.push_back({roots.back()});
  }
  for (int k = 1; k <= r; ++k) {
    classes.push_back(formal_class(k));
    vars.push_back({classes.back(), k, false});
  }
  auto w = Context::make(vars, nw, base()->mode());

  std::vector<Series> xs;
  for (const auto &name : roots) xs.push_back(Series::variable(w, name));

  Series unit = pair_unit(law);
  auto unit_at = [&](int i, int j) {
    return substitute(unit, {{"_a", xs[i]}, {"_b", xs[j]}}, w);
  };

  // Vandermonde products: full, and with root i left out.
  auto vandermonde = [&](int skip) {
    Series v = Series::constant(w, 1);
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (i != skip && j != skip) v *= xs[j] - xs[i];
    return v;
  };

  Series num(w);
  for (int i = 0; i < r; ++i) {
    Series tau = law.apply_inverse(xs[i]);
    Series value = substitute(p, {{t_, tau}}, w);
    if (value.is_zero()) continue;
    Series units = Series::constant(w, 1);
    for (int j = 0; j < r; ++j)
      if (j != i) units *= unit_at(i, j);
    Series q = value * invert_unit(units) * vandermonde(i);
    num += i % 2 ? -q : q;
  }

  Series sum(w);
  try {
    sum = exact_divide(num, vandermonde(-1));
  } catch (const Error &e) {
    if (e.code() != Errc::not_divisible) throw;
    throw Error(Errc::pushforward_not_polynomial, e.what());
  }
  Series reduced = symmetric_reduce(sum, roots, classes);

  Assignment back;
  for (int k = 1; k <= r; ++k) back.emplace(classes[k - 1], chern(k, bundle_));
  return substitute(reduced, back, base());
}

TowerRing::TowerRing(ProjBundleRing bottom) { levels_.push_back(std::move(bottom)); }

void TowerRing::push(const SplitBundle &bundle, std::string t) {
  if (!same_context(bundle.context(), top().total()))
    throw Error(Errc::incompatible_contexts, "tower level must live over the previous total ring");
  levels_.emplace_back(bundle, std::move(t));
}

Series TowerRing::pushforward_all(Series p) const {
  for (std::size_t k = levels_.size(); k-- > 0;) p = levels_[k].pushforward(p);
  return p;
}

Series pushforward_p1_formula(const FormalGroupLaw &law, const Series &u) {
  const auto &ctx = u.context();
  if (!u.is_zero() && *u.min_weight() < 1)
    throw Error(Errc::non_nilpotent_substitution, u.to_string());
  FormalGroupLaw wide = law.with_truncation(ctx->truncation() + 2);
  // H(x, y) = sum_{i,j>=1} b_ij x^(i-1) y^(j-1)
  const auto &lctx = wide.context();
  std::size_t xi = lctx->require("x"), yi = lctx->require("y");
  std::vector<Term> shifted;
  for (const auto &t : wide.series().terms()) {
    if (t.exponents[xi] == 0 || t.exponents[yi] == 0) continue;
    Term s = t;
    s.exponents[xi] -= 1;
    s.exponents[yi] -= 1;
    shifted.push_back(std::move(s));
  }
  Series h = Series::from_terms(lctx, std::move(shifted));
  FormalGroupLaw exact = law.with_truncation(ctx->truncation());
  return -substitute(h, {{"x", u}, {"y", exact.apply_inverse(u)}}, ctx);
}

ContextPtr coefficient_context(const FormalGroupLaw &law, int truncation) {
  return law.class_context({}, truncation);
}

namespace {

// [P_d] through h -> pi_!(h(F(u, t))) on P(L + O), applied d times to 1 and
// evaluated at u = 0. Each application loses one order in u.
Series tower_class(const FormalGroupLaw &law, int d, int generators) {
  auto start = law.class_context({{"u"}}, std::max(1, d), generators);
  Series h = Series::constant(start, 1);
  for (int j = 1; j <= d; ++j) {
    auto base = law.class_context({{"u"}}, std::max(1, d - j), generators);
    Series u = Series::variable(base, "u");
    ProjBundleRing ring(SplitBundle(law, base, {u, Series(base)}), "t");
    Series fu = ring.law().apply(ring.lift(u), ring.tautological());
    h = ring.pushforward(substitute(h, {{"u", fu}}, ring.total()));
  }
  return slice(h, {{"u", 0}});
}

}  // namespace

std::vector<Series> tower_classes(const FormalGroupLaw &law, int depth) {
  if (depth < 0) throw Error(Errc::out_of_range, "negative tower depth");
  auto out_ctx = coefficient_context(law, std::max(1, depth));
  const int generators = std::max(1, depth) + 4;
  std::vector<Series> out{Series::constant(out_ctx, 1)};
  for (int d = 1; d <= depth; ++d) out.push_back(tower_class(law, d, generators).embed(out_ctx));
  return out;
}

std::vector<Series> tower_classes_direct(const FormalGroupLaw &law, int depth) {
  if (depth < 0) throw Error(Errc::out_of_range, "negative tower depth");
  auto out_ctx = coefficient_context(law, std::max(1, depth));
  std::vector<Series> out{Series::constant(out_ctx, 1)};
  for (int d = 1; d <= depth; ++d) {
    auto base = coefficient_context(law, 1);
    ProjBundleRing first(SplitBundle(law, base, {Series(base), Series(base)}), "t1");
    TowerRing tower(first);
    Series line = tower.top().tautological();  // M_1 = O(1) has class F(0, t_1)
    for (int k = 2; k <= d; ++k) {
      const auto &ctx = tower.top().total();
      tower.push(SplitBundle(law, ctx, {line, Series(ctx)}), "t" + std::to_string(k));
      const auto &lvl = tower.top();
      line = lvl.law().apply(lvl.lift(line), lvl.tautological());
    }
    out.push_back(tower.pushforward_all(Series::constant(tower.top().total(), 1)).embed(out_ctx));
  }
  return out;
}

Series class_of_proj_line(const FormalGroupLaw &law, const Series &u) {
  const auto &ctx = u.context();
  if (!u.is_zero() && *u.min_weight() < 1)
    throw Error(Errc::non_nilpotent_substitution, u.to_string());
  const int n = ctx->truncation();
  auto classes = tower_classes(law, n + 1);
  Series num(ctx), den(ctx);
  for (int i = 0; i <= n; ++i) {
    Series ui = u.pow(static_cast<unsigned>(i));
    num += classes[i + 1].embed(ctx) * ui;
    den += classes[i].embed(ctx) * ui;
  }
  return num * invert_unit(den);
}

FglCheck geometric_fgl_check(const FormalGroupLaw &law, int n) {
  auto base = law.class_context({{"u1"}, {"u2"}}, n);
  FormalGroupLaw f = law.with_truncation(n);
  Series u1 = Series::variable(base, "u1"), u2 = Series::variable(base, "u2");
  Series zero(base), one = Series::constant(base, 1);
  Series f12 = f.apply(u1, u2);

  // P1 over L2; with L1 here the identity fails from weight 4 on
  ProjBundleRing r1(SplitBundle(f, base, {u2, zero}));
  Series p1 = r1.pushforward(Series::constant(r1.total(), 1));
  ProjBundleRing r2(SplitBundle(f, base, {u1, f12, zero}));
  Series p2 = r2.pushforward(Series::constant(r2.total(), 1));
  ProjBundleRing y(SplitBundle(f, base, {u1, f12}), "t");
  Series t = y.tautological();
  Series yzero(y.total());
  ProjBundleRing z(SplitBundle(f, y.total(), {y.law().apply_inverse(t), yzero}), "s");
  Series p3 = y.pushforward(z.pushforward(Series::constant(z.total(), 1)));

  Series lhs = f12 * (one + u1 * u2 * (p2 - p3));
  Series rhs = u1 + u2 - u1 * u2 * p1;
  Series diff = lhs - rhs;
  std::string failure;
  if (!diff.is_zero())
    failure = Series::from_terms(base, {Term{diff.terms().front().exponents, 1, 0}}).to_string();
  return FglCheck{diff.is_zero(), p1, p2, p3, lhs, rhs, failure};
}

SequenceResult sequence_extend(const std::vector<Series> &cs,
                               const std::vector<Series> &seed, int limit) {
  if (cs.size() < 2) throw Error(Errc::invalid_argument, "need at least two relation coefficients");
  const int r = static_cast<int>(cs.size()) - 1;
  if (static_cast<int>(seed.size()) != r)
    throw Error(Errc::invalid_argument, "seed must have " + std::to_string(r) + " entries");
  if (limit < r) throw Error(Errc::out_of_range, "limit below relation order");
  const auto &ctx = cs[r].context();
  for (const auto &c : cs)
    if (!same_context(c.context(), ctx)) throw Error(Errc::incompatible_contexts, "relation");
  for (const auto &s : seed)
    if (!same_context(s.context(), ctx)) throw Error(Errc::incompatible_contexts, "seed");
  Series lead_inv = invert_unit(cs[r]);

  SequenceResult out;
  out.values = seed;
  for (int k = r; k <= limit; ++k) {
    Series acc(ctx);
    for (int j = 0; j < r; ++j) acc += cs[j] * out.values[k - r + j];
    out.values.push_back(-(lead_inv * acc));
  }
  for (int s = 0; s + r <= static_cast<int>(out.values.size()); ++s) {
    bool zeros = std::all_of(out.values.begin() + s, out.values.begin() + s + r,
                             [](const Series &a) { return a.is_zero(); });
    if (zeros) {
      out.stabilization = s;
      break;
    }
  }
  if (!out.stabilization) {
    bool nilpotent = std::all_of(cs.begin(), cs.end() - 1,
                                 [](const Series &c) { return c.constant_term() == 0; });
    if (nilpotent)
      throw Error(Errc::finiteness_violated,
                  "no stabilization by index " + std::to_string(limit));
  }
  return out;
}

}  // namespace occ
