#include "occ/specializations.hpp"

#include <array>
#include <random>

#include "occ/error.hpp"

namespace occ {

namespace {

void require_rational(const ContextPtr &ctx, const char *what) {
  if (!ctx->rational()) throw Error(Errc::requires_rational, what);
}

void require_law(const FormalGroupLaw &law, LawKind kind, const char *what) {
  if (law.kind() != kind)
    throw Error(Errc::law_mismatch, std::string(what) + " needs the " + law_name(kind) +
                                        " law, got " + law.name());
}

// 1 / sum a_k z^k for a_0 != 0
std::vector<Rational> invert_list(const std::vector<Rational> &a) {
  std::vector<Rational> b(a.size());
  b[0] = 1 / a[0];
  for (std::size_t k = 1; k < a.size(); ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    b[k] = -acc / a[0];
  }
  return b;
}

std::vector<Rational> exp_list(int n, const Rational &scale) {
  std::vector<Rational> c(n + 1);
  Rational p = 1;
  for (int k = 0; k <= n; ++k) {
    c[k] = p / factorial(k);
    p *= scale;
  }
  return c;
}

Series exp_of(const Series &u, const Rational &scale) {
  return compose_univariate(exp_list(u.context()->truncation(), scale), u);
}

// log(1 - z) = -sum z^k / k
std::vector<Rational> log1m_list(int n) {
  std::vector<Rational> c(n + 1);
  for (int k = 1; k <= n; ++k) c[k] = Rational(-1, k);
  return c;
}

std::vector<std::string> generator_names(const ContextPtr &ctx) {
  std::vector<std::string> out;
  for (const auto &v : ctx->variables())
    if (!v.nilpotent && v.name.size() > 1 && v.name[0] == 'm' &&
        v.name.find_first_not_of("0123456789", 1) == std::string::npos)
      out.push_back(v.name);
  return out;
}

}  // namespace

SpecializationMap SpecializationMap::to(LawKind target) {
  if (target != LawKind::additive && target != LawKind::multiplicative)
    throw Error(Errc::invalid_argument, "specialization target must be additive or multiplicative");
  return {target};
}

Rational SpecializationMap::value(int i) const {
  return target == LawKind::additive ? Rational(0) : Rational(1, i + 1);
}

Series specialize(const SpecializationMap &map, const Series &p) {
  const auto &ctx = p.context();
  require_rational(ctx, "specialization");
  auto names = generator_names(ctx);
  auto dest = ctx->without(names);
  Assignment a;
  for (const auto &name : names)
    a.emplace(name, Series::constant(dest, map.value(std::stoi(name.substr(1)))));
  return substitute(p, a, dest);
}

Series ch_m(const SplitBundle &bundle) {
  require_law(bundle.law(), LawKind::multiplicative, "ch_m");
  Series out(bundle.context());
  Series one = Series::constant(bundle.context(), 1);
  for (const auto &x : bundle.roots()) out += one - bundle.law().apply_inverse(x);
  return out;
}

Series ch_a(const SplitBundle &bundle) {
  require_law(bundle.law(), LawKind::additive, "ch_a");
  require_rational(bundle.context(), "ch_a");
  Series out(bundle.context());
  for (const auto &x : bundle.roots()) out += exp_of(x, -1);
  return out;
}

std::vector<Rational> todd_factor(int n) {
  // (exp(-z) - 1) / z
  std::vector<Rational> q(n + 1);
  for (int k = 0; k <= n; ++k) q[k] = exp_list(n + 1, -1)[k + 1];
  return invert_list(q);
}

std::vector<Rational> todd_prime_factor(int n) {
  // log(1 - z) / z
  std::vector<Rational> q(n + 1);
  for (int k = 0; k <= n; ++k) q[k] = Rational(-1, k + 1);
  return invert_list(q);
}

Series todd(const SplitBundle &bundle) {
  require_law(bundle.law(), LawKind::additive, "todd");
  require_rational(bundle.context(), "todd");
  auto factor = todd_factor(bundle.context()->truncation());
  Series out = Series::constant(bundle.context(), 1);
  for (const auto &x : bundle.roots()) out *= compose_univariate(factor, x);
  return out;
}

Series todd_prime(const FormalGroupLaw &law, const Series &u) {
  require_law(law, LawKind::multiplicative, "todd_prime");
  require_rational(u.context(), "todd_prime");
  return compose_univariate(todd_prime_factor(u.context()->truncation()),
                            law.with_truncation(u.context()->truncation()).apply_inverse(u));
}

Series twisted_c1(Twist mode, const Series &u) {
  require_rational(u.context(), "twisted first Chern class");
  if (mode == Twist::t) return Series::constant(u.context(), 1) - exp_of(u, 1);
  return compose_univariate(log1m_list(u.context()->truncation()), u);
}

Rational k_chi_oracle(int r, int k) {
  if (r < 1) throw Error(Errc::invalid_argument, "rank must be positive");
  return binomial(Rational(k + r - 1), r - 1);
}

namespace {

ProjBundleRing point_bundle(LawKind kind, int r) {
  if (r < 1) throw Error(Errc::invalid_argument, "rank must be positive");
  auto law = FormalGroupLaw::make(kind, 1);
  auto base = law.class_context({}, 1);
  return ProjBundleRing(SplitBundle(law, base, std::vector<Series>(r, Series(base))));
}

}  // namespace

Rational k_pushforward(int r, int k) {
  auto p = point_bundle(LawKind::multiplicative, r);
  Series t = p.tautological();
  Series cls = Series::constant(p.total(), 1) - p.law().apply_nseries(-k, t);
  return p.pushforward(cls).constant_term();
}

Rational grr_lhs(int r, int k) {
  auto p = point_bundle(LawKind::additive, r);
  const auto &ctx = p.total();
  Series t = p.tautological();
  std::vector<Series> roots;
  SplitBundle lifted = p.bundle().rebased(ctx);
  for (const auto &x : lifted.roots())
    roots.push_back(p.law().apply_inverse(p.law().apply(x, t)));
  Series td = -todd(SplitBundle(p.law(), ctx, roots));
  Series ch = exp_of(p.law().apply_nseries(k, t), -1);
  return p.pushforward(ch * td).constant_term();
}

GrrResult grr_check(int r, int k) {
  if (r < 2) throw Error(Errc::invalid_argument, "grr needs rank at least 2");
  return {grr_lhs(r, k), k_pushforward(r, k), k_chi_oracle(r, k)};
}

Report conner_floyd_check(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "truncation must be at least 1");
  Report rep{"cf", {}};
  auto spec = SpecializationMap::to(LawKind::multiplicative);
  auto U = FormalGroupLaw::make(LawKind::universal, n);
  auto M = FormalGroupLaw::make(LawKind::multiplicative, n);
  auto compare = [&](const std::string &item, const Series &universal, const Series &direct) {
    Series s = specialize(spec, universal);
    rep.add(item, direct.to_string(), s.to_string(), s == direct);
  };

  compare("law", U.series(), M.series());

  std::vector<Variable> classes = {{"u"}, {"v"}, {"w"}};
  auto cu = U.class_context(classes, n), cm = M.class_context(classes, n);
  auto var = [](const ContextPtr &c, const char *name) { return Series::variable(c, name); };

  {
    ProjBundleRing pu(SplitBundle(U, cu, {var(cu, "u"), Series(cu)}));
    ProjBundleRing pm(SplitBundle(M, cm, {var(cm, "u"), Series(cm)}));
    compare("p1 pushforward", pu.pushforward(Series::constant(pu.total(), 1)),
            pm.pushforward(Series::constant(pm.total(), 1)));
  }
  {
    auto roots = [&](const FormalGroupLaw &f, const ContextPtr &c) {
      return std::vector<Series>{var(c, "u"), var(c, "v"), f.apply(var(c, "u"), var(c, "w"))};
    };
    ProjBundleRing pu(SplitBundle(U, cu, roots(U, cu)));
    ProjBundleRing pm(SplitBundle(M, cm, roots(M, cm)));
    Series tu = pu.tautological(), tm = pm.tautological();
    for (unsigned j = 0; j <= 3; ++j)
      compare("rank 3 pushforward of t^" + std::to_string(j), pu.pushforward(tu.pow(j)),
              pm.pushforward(tm.pow(j)));
  }

  std::mt19937 rng(1729);
  auto small = [&] { return static_cast<int>(rng() % 5) - 2; };
  for (int b = 0; b < 6; ++b) {
    int rank = 1 + static_cast<int>(rng() % 3);
    std::vector<std::array<int, 4>> forms;
    for (int i = 0; i < rank; ++i) {
      std::array<int, 4> f{small(), small(), small(), small()};
      if (!f[0] && !f[1] && !f[2]) f[0] = 1;
      forms.push_back(f);
    }
    auto build = [&](const FormalGroupLaw &f, const ContextPtr &c) {
      Series u = var(c, "u"), v = var(c, "v"), w = var(c, "w");
      std::vector<Series> roots;
      for (const auto &a : forms)
        roots.push_back(u.scaled(a[0]) + v.scaled(a[1]) + w.scaled(a[2]) + (u * v).scaled(a[3]));
      return twist_by_line(SplitBundle(f, c, roots), w);
    };
    auto eu = build(U, cu), em = build(M, cm);
    for (int k = 1; k <= rank; ++k) {
      std::string tag = "bundle " + std::to_string(b) + " c" + std::to_string(k);
      compare(tag, chern(k, eu), chern(k, em));
      compare(tag + " of dual", chern(k, dual(eu)), chern(k, dual(em)));
    }
  }

  int depth = std::min(n, 4);
  auto tu = tower_classes(U, depth), tm = tower_classes(M, depth);
  for (int i = 0; i <= depth; ++i) compare("tower class " + std::to_string(i), tu[i], tm[i]);

  int g = std::min(n, 5);
  auto gu = geometric_fgl_check(U, g), gm = geometric_fgl_check(M, g);
  compare("geometric class p1", gu.p1, gm.p1);
  compare("geometric class p2", gu.p2, gm.p2);
  compare("geometric class p3", gu.p3, gm.p3);
  return rep;
}

}  // namespace occ
