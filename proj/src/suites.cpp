#include "occ/suites.hpp"

#include <random>

#include "occ/error.hpp"
#include "occ/expr.hpp"
#include "occ/specializations.hpp"

namespace occ {

namespace {

const LawKind kLaws[] = {LawKind::additive, LawKind::multiplicative, LawKind::universal};

std::string str(const Series &s) { return s.to_string(); }

void same(Report &rep, std::string item, const Series &actual, const Series &expected) {
  rep.add(std::move(item), str(expected), str(actual), actual == expected);
}

// Random roots and base elements, built from a fixed pool of shapes.
struct Sampler {
  std::mt19937 rng;
  const FormalGroupLaw &law;
  ContextPtr ctx;
  std::vector<Series> vars;

  Sampler(unsigned seed, const FormalGroupLaw &f, ContextPtr c) : rng(seed), law(f), ctx(c) {
    for (const auto &v : ctx->variables())
      if (v.nilpotent) vars.push_back(Series::variable(ctx, v.name));
  }

  int pick(int lo, int hi) { return lo + static_cast<int>(rng() % unsigned(hi - lo + 1)); }

  Series linear() {
    Series s(ctx);
    while (s.is_zero())
      for (const auto &v : vars) s += v.scaled(pick(-2, 2));
    return s;
  }

  Series root() {
    switch (pick(0, 5)) {
      case 0: return Series(ctx);
      case 1: return linear() + linear() * linear();
      case 2: {
        Series r = law.apply(linear(), linear());
        return r.component(1).is_zero() ? linear() : r;
      }
      case 3: return law.apply_inverse(linear());
      default: return linear();
    }
  }

  std::vector<Series> roots(int rank) {
    std::vector<Series> out;
    for (int i = 0; i < rank; ++i) out.push_back(root());
    return out;
  }

  Series base_element() {
    Series s = Series::constant(ctx, pick(-3, 3));
    if (pick(0, 1)) s += linear();
    if (pick(0, 1)) s += linear() * linear();
    if (law.kind() == LawKind::universal && pick(0, 1))
      s += Series::variable(ctx, "m1") * linear();
    return s;
  }
};

std::vector<Variable> class_vars(int count) {
  static const char *names[] = {"u", "v", "w", "z"};
  std::vector<Variable> out;
  for (int i = 0; i < count; ++i) out.push_back({names[i]});
  return out;
}

Report fgl_axioms(int n) {
  Report rep{"fgl-axioms", {}};
  for (auto kind : kLaws) {
    auto law = FormalGroupLaw::make(kind, n);
    std::string tag = law.name() + " N=" + std::to_string(n) + " ";
    for (const auto &ax : check_axioms(law)) {
      if (!ax.applicable) continue;
      rep.add(tag + ax.axiom, "holds", ax.pass ? "holds" : "fails at " + ax.first_failure,
              ax.pass);
    }
    Series x = Series::variable(law.context(), "x");
    same(rep, tag + "F(x, iota(x))", law.apply(x, law.inverse()), Series(law.context()));
    for (int k = 1; k <= 4; ++k) {
      Series comp = law.apply(law.nseries(k), law.nseries(-k));
      same(rep, tag + "F([" + std::to_string(k) + "](x), [-" + std::to_string(k) + "](x))", comp,
           Series(law.context()));
    }
  }
  return rep;
}

Report whitney(int n) {
  Report rep{"whitney", {}};
  std::mt19937 pick(4242);
  for (int i = 0; i < 50; ++i) {
    auto law = FormalGroupLaw::make(kLaws[i % 3], n);
    auto ctx = law.class_context(class_vars(1 + static_cast<int>(pick() % 4)), n);
    Sampler s(1000 + i, law, ctx);
    SplitBundle e(law, ctx, s.roots(s.pick(0, 3)));
    SplitBundle f(law, ctx, s.roots(s.pick(0, 3)));
    std::string tag = "instance " + std::to_string(i) + " " + law.name() + " ranks " +
                      std::to_string(e.rank()) + "+" + std::to_string(f.rank());
    same(rep, tag, total_chern(direct_sum(e, f)), total_chern(e) * total_chern(f));
  }
  return rep;
}

Report pbf(int n) {
  Report rep{"pbf", {}};
  for (auto kind : kLaws) {
    auto law = FormalGroupLaw::make(kind, n);
    auto ctx = law.class_context(class_vars(3), n);
    auto parse = [&](const char *e) { return parse_expression(e, ctx, &law); };
    std::string tag = law.name() + " N=" + std::to_string(n) + " ";

    const std::vector<std::vector<const char *>> shapes = {
        {"u"}, {"u", "F(v,w)"}, {"u", "v", "inv(w)"}, {"0", "0", "0"}};
    for (const auto &shape : shapes) {
      std::vector<Series> roots;
      std::string name;
      for (const char *r : shape) {
        roots.push_back(parse(r));
        name += (name.empty() ? "" : ",") + std::string(r);
      }
      ProjBundleRing ring(SplitBundle(law, ctx, roots));
      const auto &tctx = ring.total();
      const auto &tl = ring.law();
      Series t = ring.tautological();
      SplitBundle lifted = ring.bundle().rebased(tctx);
      Series expansion = Series::constant(tctx, 1);
      for (const auto &x : lifted.roots()) expansion *= tl.apply_inverse(x) - t;
      std::string rt = tag + "P(" + name + ") ";
      same(rep, rt + "root expansion of the relation", expansion, ring.relation_series());
      Series e = euler(twist_by_line(dual(lifted), tl.apply_inverse(t)));
      if (kind == LawKind::additive) same(rep, rt + "e(E^dual(-1)) equals the relation", e, expansion);
      same(rep, rt + "relation reduces to 0", ring.reduce(ring.relation_series()), Series(tctx));
      same(rep, rt + "e(E^dual(-1)) reduces to 0", ring.reduce(e), Series(tctx));
      Series top = ring.pushforward(t.pow(ring.rank() - 1));
      if (name == "0,0,0")
        rep.add(rt + "degree of t^(r-1)", "1", to_string(top.constant_term()));
    }

    Series u = parse("u");
    ProjBundleRing line(SplitBundle(law, ctx, {u, Series(ctx)}));
    Series direct = line.pushforward(Series::constant(line.total(), 1));
    same(rep, tag + "P(L+O) residue vs closed form", direct, pushforward_p1_formula(law, u));
    same(rep, tag + "P(L+O) residue vs tower ratio", class_of_proj_line(law, u), direct);
  }

  for (int i = 0; i < 20; ++i) {
    int m = std::min(n, 4);
    auto law = FormalGroupLaw::make(kLaws[i % 3], m);
    auto ctx = law.class_context(class_vars(3), m);
    Sampler s(77 + i, law, ctx);
    ProjBundleRing ring(SplitBundle(law, ctx, s.roots(s.pick(1, 3))));
    Series alpha = s.base_element();
    Series t = ring.tautological();
    Series beta = ring.lift(s.base_element()) + t * ring.lift(s.base_element()) +
                  t.pow(static_cast<unsigned>(s.pick(2, 4)));
    same(rep,
         "projection formula " + std::to_string(i) + " " + law.name() + " rank " +
             std::to_string(ring.rank()),
         ring.pushforward(ring.lift(alpha) * beta), alpha * ring.pushforward(beta));
  }

  for (int i = 0; i < 20; ++i) {
    int m = std::min(n, 4);
    auto law = FormalGroupLaw::make(kLaws[i % 3], m);
    auto ctx = law.class_context(class_vars(3), m);
    Sampler s(300 + i, law, ctx);
    ProjBundleRing ring(SplitBundle(law, ctx, s.roots(s.pick(2, 3))));
    const int r = ring.rank();
    auto cs = pb_relation_poly(ring.bundle(), ring.variable());
    Series beta = ring.lift(s.base_element());
    Series t = ring.tautological();
    std::vector<Series> seed;
    for (int j = 0; j < r; ++j) seed.push_back(ring.pushforward(t.pow(j) * beta));
    const int limit = m * r + r;
    std::string tag = "recursion " + std::to_string(i) + " " + law.name() + " rank " +
                      std::to_string(r);
    auto res = sequence_extend(cs, seed, limit);
    bool ok = true;
    for (int k = 0; k <= limit && ok; ++k)
      ok = res.values[k] == ring.pushforward(t.pow(k) * beta);
    rep.add(tag + " against pushforwards", "agree", ok ? "agree" : "differ", ok);
    int stab = res.stabilization.value_or(-1);
    rep.add(tag + " stabilization within N*r", "<= " + std::to_string(m * r),
            std::to_string(stab), stab >= 0 && stab <= m * r);
  }
  return rep;
}

Report grr() {
  Report rep{"grr", {}};
  for (int r = 2; r <= 3; ++r)
    for (int k = 0; k <= 4; ++k) {
      auto g = grr_check(r, k);
      std::string tag = "r=" + std::to_string(r) + " k=" + std::to_string(k);
      rep.add(tag + " additive side", to_string(g.oracle), to_string(g.lhs));
      rep.add(tag + " multiplicative side", to_string(g.oracle), to_string(g.rhs));
    }
  for (int r = 2; r <= 4; ++r)
    for (int k = 0; k <= 5; ++k)
      rep.add("chi r=" + std::to_string(r) + " k=" + std::to_string(k),
              to_string(k_chi_oracle(r, k)), to_string(k_pushforward(r, k)));
  return rep;
}

Report fgl_theorem(std::optional<int> n) {
  Report rep{"fgl-theorem", {}};
  for (auto kind : kLaws) {
    int m = n ? *n : (kind == LawKind::universal ? 5 : 6);
    auto c = geometric_fgl_check(FormalGroupLaw::make(kind, m), m);
    std::string tag = law_name(kind) + " N=" + std::to_string(m);
    rep.add(tag, str(c.rhs), c.pass ? str(c.lhs) : str(c.lhs) + " (first difference at " +
                                                       c.first_failure + ")",
            c.pass);
  }
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"fgl-axioms", "whitney", "pbf", "cf", "grr", "fgl-theorem"};
}

Report run_suite(std::string_view name, std::optional<int> truncation) {
  if (truncation && *truncation < 1)
    throw Error(Errc::invalid_argument, "truncation must be at least 1");
  if (name == "fgl-axioms") return fgl_axioms(truncation.value_or(6));
  if (name == "whitney") return whitney(truncation.value_or(6));
  if (name == "pbf") return pbf(truncation.value_or(6));
  if (name == "cf") return conner_floyd_check(truncation.value_or(4));
  if (name == "grr") return grr();
  if (name == "fgl-theorem") return fgl_theorem(truncation);
  throw Error(Errc::invalid_argument, "unknown suite '" + std::string(name) + "'");
}

}  // namespace occ
