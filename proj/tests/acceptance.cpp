// Acceptance run: one PASS/FAIL line per criterion. The expected values are
// recomputed here by independent means where possible.
//
// usage: acceptance <path to occ>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "occ/error.hpp"
#include "occ/expr.hpp"
#include "occ/proj_bundle.hpp"
#include "occ/specializations.hpp"
#include "occ/suites.hpp"

using namespace occ;

namespace {

const LawKind kLaws[] = {LawKind::additive, LawKind::multiplicative, LawKind::universal};

struct Outcome {
  bool pass = true;
  std::string detail;
  int checks = 0;

  void expect(bool ok, const std::string &what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::vector<Variable> vars(std::initializer_list<const char *> names) {
  std::vector<Variable> out;
  for (auto n : names) out.push_back({n});
  return out;
}

// Random nilpotent classes: small integer combinations, products, formal
// sums and inverses.
struct Random {
  std::mt19937 rng;
  const FormalGroupLaw &law;
  std::vector<Series> gens;

  Random(unsigned seed, const FormalGroupLaw &f, const ContextPtr &ctx) : rng(seed), law(f) {
    for (const auto &v : ctx->variables())
      if (v.nilpotent) gens.push_back(Series::variable(ctx, v.name));
  }
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  Series linear() {
    Series s(gens.front().context());
    while (s.is_zero())
      for (const auto &g : gens) s += g.scaled(pick(-1, 2));
    return s;
  }
  // zero, or a class with nonzero linear part
  Series root() {
    Series r(gens.front().context());
    switch (pick(0, 4)) {
      case 0: return r;
      case 1: r = law.apply(linear(), linear()); break;
      case 2: r = law.apply_inverse(linear()); break;
      case 3: r = linear() + linear() * linear(); break;
      default: r = linear();
    }
    return r.component(1).is_zero() ? linear() : r;
  }
  std::vector<Series> roots(int r) {
    std::vector<Series> out;
    for (int i = 0; i < r; ++i) out.push_back(root());
    return out;
  }
  Series element() {
    const auto &ctx = gens.front().context();
    Series s = Series::constant(ctx, pick(-2, 2)) + linear() * Series::constant(ctx, pick(0, 1));
    s += linear() * linear();
    if (ctx->contains("m1")) s += Series::variable(ctx, "m1") * linear();
    return s;
  }
};

// prod (1 + x_i) expanded by hand
Series product_of_one_plus(const ContextPtr &ctx, const std::vector<Series> &roots) {
  Series out = Series::constant(ctx, 1);
  for (const auto &x : roots) out = out + out * x;
  return out;
}

// e_k of a list, by the subset recursion
std::vector<Series> elementary(const ContextPtr &ctx, const std::vector<Series> &xs) {
  std::vector<Series> e{Series::constant(ctx, 1)};
  for (const auto &x : xs) {
    e.push_back(Series(ctx));
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += e[k - 1] * x;
  }
  return e;
}

Rational binomial_count(int n, int k) {
  // Pascal triangle
  std::vector<std::vector<Rational>> c(n + 1, std::vector<Rational>(n + 1, Rational(0)));
  for (int i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : Rational(0));
  }
  return k < 0 || k > n ? Rational(0) : c[n][k];
}

std::string run_command(const std::string &cmd, int &status) {
  std::string out;
  FILE *p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  status = pclose(p);
  return out;
}

// 1
Outcome axioms() {
  Outcome o;
  for (auto kind : kLaws) {
    auto law = FormalGroupLaw::make(kind, 6);
    auto ctx = law.class_context(vars({"a", "b", "c"}), 6);
    Series a = Series::variable(ctx, "a"), b = Series::variable(ctx, "b"),
           c = Series::variable(ctx, "c"), zero(ctx);
    std::string tag = law.name() + " ";
    o.expect(law.apply(a, zero) == a, tag + "unit");
    o.expect(law.apply(zero, b) == b, tag + "unit (left)");
    o.expect(law.apply(a, b) == law.apply(b, a), tag + "commutativity");
    o.expect(law.apply(law.apply(a, b), c) == law.apply(a, law.apply(b, c)), tag + "associativity");
  }
  return o;
}

// 2
Outcome inverse_and_nseries() {
  Outcome o;
  for (auto kind : kLaws) {
    auto law = FormalGroupLaw::make(kind, 6);
    auto ctx = law.context();
    Series x = Series::variable(ctx, "x"), zero(ctx);
    std::string tag = law.name() + " ";
    o.expect(law.apply(x, law.inverse()).is_zero(), tag + "F(x, iota(x))");
    // [k] and [-k] by repeated formal addition
    Series plus = zero, minus = zero;
    for (int k = 1; k <= 4; ++k) {
      plus = law.apply(plus, x);
      minus = law.apply(minus, law.inverse());
      o.expect(plus == law.nseries(k), tag + "[" + std::to_string(k) + "] by iteration");
      o.expect(minus == law.nseries(-k), tag + "[-" + std::to_string(k) + "] by iteration");
      o.expect(law.apply(plus, minus).is_zero(), tag + "F([k]x, [-k]x) k=" + std::to_string(k));
    }
  }
  return o;
}

// 3
Outcome specialization() {
  Outcome o;
  const int n = 8;
  auto u = FormalGroupLaw::make(LawKind::universal, n);
  for (auto target : {LawKind::additive, LawKind::multiplicative}) {
    auto map = SpecializationMap::to(target);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) {
        Series c = specialize(map, u.coefficient(i, j));
        // x + y, or x + y - xy
        Rational want = (i + j == 1) ? 1 : 0;
        if (target == LawKind::multiplicative && i == 1 && j == 1) want = -1;
        bool constant = c.is_zero() || (c.size() == 1 && c.terms()[0].exponents == Exponents(c.context()->size(), 0));
        o.expect(constant && c.constant_term() == want,
                 law_name(target) + " coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                     ") = " + c.to_string());
      }
  }
  return o;
}

// 4
Outcome whitney() {
  Outcome o;
  std::mt19937 shapes(99);
  for (int i = 0; i < 50; ++i) {
    auto law = FormalGroupLaw::make(kLaws[i % 3], 6);
    int nv = 1 + static_cast<int>(shapes() % 4);
    std::vector<Variable> vs;
    for (int j = 0; j < nv; ++j) vs.push_back({std::string(1, char('p' + j))});
    auto ctx = law.class_context(vs, 6);
    Random rnd(5000 + i, law, ctx);
    auto re = rnd.roots(rnd.pick(0, 3)), rf = rnd.roots(rnd.pick(0, 3));
    SplitBundle e(law, ctx, re), f(law, ctx, rf);
    auto all = re;
    all.insert(all.end(), rf.begin(), rf.end());
    Series oracle = product_of_one_plus(ctx, all);
    std::string tag = "instance " + std::to_string(i);
    o.expect(total_chern(direct_sum(e, f)) == oracle, tag + " c(E+F)");
    o.expect(total_chern(e) * total_chern(f) == oracle, tag + " c(E)c(F)");
  }
  return o;
}

// 5
Outcome relation() {
  Outcome o;
  for (auto kind : kLaws) {
    auto law = FormalGroupLaw::make(kind, 5);
    auto ctx = law.class_context(vars({"u", "v", "w"}), 5);
    Random rnd(kind == LawKind::universal ? 31 : kind == LawKind::additive ? 11 : 21, law, ctx);
    for (int r = 1; r <= 3; ++r)
      for (int rep = 0; rep < 2; ++rep) {
        ProjBundleRing ring(SplitBundle(law, ctx, rnd.roots(r)));
        const auto &tctx = ring.total();
        const auto &tl = ring.law();
        Series t = ring.tautological();
        SplitBundle lifted = ring.bundle().rebased(tctx);
        std::vector<Series> dual_roots;
        Series expansion = Series::constant(tctx, 1);
        for (const auto &x : lifted.roots()) {
          dual_roots.push_back(tl.apply_inverse(x));
          expansion *= dual_roots.back() - t;
        }
        auto c = elementary(tctx, dual_roots);
        Series formula(tctx);
        for (int i = 0; i <= r; ++i) formula += c[r - i] * t.pow(i).scaled(i % 2 ? -1 : 1);
        std::string tag = law.name() + " r=" + std::to_string(r) + " ";
        o.expect(expansion == formula, tag + "root expansion vs sum (-1)^i c_(r-i)(E^dual) t^i");
        o.expect(ring.relation_series() == formula, tag + "relation of the ring");
        o.expect(ring.reduce(formula).is_zero(), tag + "relation reduces to 0");
        Series e = euler(twist_by_line(dual(lifted), tl.apply_inverse(t)));
        if (kind == LawKind::additive) o.expect(e == formula, tag + "e(E^dual(-1)) expansion");
        o.expect(ring.reduce(e).is_zero(), tag + "e(E^dual(-1)) reduces to 0");
      }
  }
  return o;
}

// 6
Outcome p1_pushforward() {
  Outcome o;
  const int n = 6;
  auto law = FormalGroupLaw::make(LawKind::universal, n);
  auto ctx = law.class_context(vars({"u", "v"}), n);
  auto wide = law.with_truncation(n + 2);
  for (const char *expr : {"u", "u + v", "2*u - v^2", "F(u, v)"}) {
    Series u = parse_expression(expr, ctx, &law);
    Series iu = law.apply_inverse(u);
    Series oracle(ctx);
    for (int i = 1; i <= n + 1; ++i)
      for (int j = 1; i + j <= n + 2; ++j) {
        Series b = wide.coefficient(i, j).embed(ctx);
        oracle -= b * u.pow(i - 1) * iu.pow(j - 1);
      }
    ProjBundleRing ring(SplitBundle(law, ctx, {u, Series(ctx)}));
    Series direct = ring.pushforward(Series::constant(ring.total(), 1));
    o.expect(direct == oracle, std::string("L with e(L) = ") + expr);
  }
  return o;
}

// 7
Outcome chi() {
  Outcome o;
  for (int r = 2; r <= 4; ++r)
    for (int k = 0; k <= 5; ++k)
      o.expect(k_pushforward(r, k) == binomial_count(k + r - 1, r - 1),
               "r=" + std::to_string(r) + " k=" + std::to_string(k));
  return o;
}

// 8
Outcome grr() {
  Outcome o;
  for (int r = 2; r <= 3; ++r)
    for (int k = 0; k <= 4; ++k) {
      auto g = grr_check(r, k);
      Rational want = binomial_count(k + r - 1, r - 1);
      std::string tag = "r=" + std::to_string(r) + " k=" + std::to_string(k);
      o.expect(g.pass(), tag + " grr_check");
      o.expect(g.lhs == want && g.rhs == want, tag + " binomial");
    }
  return o;
}

// 9
Outcome todd_identities() {
  Outcome o;
  const int n = 8;
  auto a = FormalGroupLaw::make(LawKind::additive, n);
  auto m = FormalGroupLaw::make(LawKind::multiplicative, n);
  auto actx = a.class_context(vars({"u1", "u2"}), n);
  auto mctx = m.class_context(vars({"u1", "u2"}), n);
  Series au1 = Series::variable(actx, "u1"), au2 = Series::variable(actx, "u2");
  Series mu1 = Series::variable(mctx, "u1"), mu2 = Series::variable(mctx, "u2");

  // 1 - exp(u) and log(1 - u) by their coefficients
  std::vector<Rational> one_minus_exp{0}, log_one_minus{0};
  Rational fact = 1;
  for (int k = 1; k <= n; ++k) {
    fact *= k;
    one_minus_exp.push_back(-1 / fact);
    log_one_minus.push_back(Rational(-1, k));
  }
  o.expect(twisted_c1(Twist::t, au1) == compose_univariate(one_minus_exp, au1), "c1^t closed form");
  o.expect(twisted_c1(Twist::t_prime, mu1) == compose_univariate(log_one_minus, mu1),
           "c1^t' closed form");
  o.expect(twisted_c1(Twist::t, au1 + au2) ==
               m.apply(twisted_c1(Twist::t, au1), twisted_c1(Twist::t, au2)),
           "c1^t turns the additive law into the multiplicative one");
  o.expect(twisted_c1(Twist::t_prime, m.apply(mu1, mu2)) ==
               twisted_c1(Twist::t_prime, mu1) + twisted_c1(Twist::t_prime, mu2),
           "c1^t' turns the multiplicative law into the additive one");

  Series td_prime_t =
      compose_univariate(todd_prime_factor(n), twisted_c1(Twist::t, a.apply_inverse(au1)));
  o.expect(td_prime_t * todd(SplitBundle(a, actx, {au1})) == Series::constant(actx, 1),
           "Td'^t Td = 1");
  Series td_t_prime = compose_univariate(todd_factor(n), twisted_c1(Twist::t_prime, mu1));
  o.expect(td_t_prime * todd_prime(m, mu1) == Series::constant(mctx, 1), "Td^t' Td' = 1");
  return o;
}

// 10
Outcome fgl_theorem() {
  Outcome o;
  for (auto [kind, n] : {std::pair{LawKind::additive, 6}, std::pair{LawKind::multiplicative, 6},
                         std::pair{LawKind::universal, 5}}) {
    auto c = geometric_fgl_check(FormalGroupLaw::make(kind, n), n);
    o.expect(c.pass, law_name(kind) + " N=" + std::to_string(n) + " differs at " + c.first_failure);
  }
  return o;
}

// 11
Outcome ratio_identity() {
  Outcome o;
  for (auto kind : kLaws) {
    auto law = FormalGroupLaw::make(kind, 6);
    auto ctx = law.class_context(vars({"u"}), 6);
    Series u = Series::variable(ctx, "u");
    ProjBundleRing ring(SplitBundle(law, ctx, {u, Series(ctx)}));
    o.expect(class_of_proj_line(law, u) == ring.pushforward(Series::constant(ring.total(), 1)),
             law.name());
  }
  return o;
}

// 12
Outcome recursion() {
  Outcome o;
  for (int i = 0; i < 20; ++i) {
    const int n = 4;
    auto law = FormalGroupLaw::make(kLaws[i % 3], n);
    auto ctx = law.class_context(vars({"u", "v", "w"}), n);
    Random rnd(600 + i, law, ctx);
    int r = rnd.pick(2, 3);
    ProjBundleRing ring(SplitBundle(law, ctx, rnd.roots(r)));
    auto cs = pb_relation_poly(ring.bundle(), ring.variable());
    Series beta = ring.lift(rnd.element());
    Series t = ring.tautological();
    std::vector<Series> seed;
    for (int j = 0; j < r; ++j) seed.push_back(ring.pushforward(t.pow(j) * beta));
    const int limit = n * r + 2 * r;
    auto res = sequence_extend(cs, seed, limit);

    // forward substitution: a_(k+r) = -(sum_(j<r) c_j a_(k+j)) / c_r
    std::vector<Series> a = seed;
    Series lead = cs[r];
    std::string tag = "instance " + std::to_string(i) + " rank " + std::to_string(r);
    o.expect(lead.size() == 1 && lead.min_weight() == 0, tag + " leading coefficient not a constant");
    Rational inv = 1 / lead.constant_term();
    for (int k = 0; a.size() <= std::size_t(limit); ++k) {
      Series acc(ctx);
      for (int j = 0; j < r; ++j) acc += cs[j] * a[k + j];
      a.push_back(acc.scaled(-inv));
    }
    bool agree = res.values.size() == a.size();
    for (std::size_t k = 0; agree && k < a.size(); ++k) agree = res.values[k] == a[k];
    o.expect(agree, tag + " forward substitution");
    // first index of r consecutive zeros in the oracle sequence
    int first = -1;
    for (int k = 0; k + r <= limit + 1 && first < 0; ++k) {
      bool zeros = true;
      for (int j = 0; j < r; ++j) zeros = zeros && a[k + j].is_zero();
      if (zeros) first = k;
    }
    o.expect(first >= 0 && first <= n * r, tag + " stabilizes within N*r");
    o.expect(res.stabilization && *res.stabilization == first, tag + " reported stabilization");
    for (int k = std::max(first, 0); k <= limit; ++k)
      o.expect(a[k].is_zero(), tag + " zero tail");
    o.expect(a[r + 1] == ring.pushforward(t.pow(r + 1) * beta), tag + " against a pushforward");
  }
  return o;
}

// 13
Outcome projection_formula() {
  Outcome o;
  for (int i = 0; i < 20; ++i) {
    auto law = FormalGroupLaw::make(kLaws[i % 3], 4);
    auto ctx = law.class_context(vars({"u", "v", "w"}), 4);
    Random rnd(900 + i, law, ctx);
    ProjBundleRing ring(SplitBundle(law, ctx, rnd.roots(rnd.pick(1, 3))));
    Series alpha = rnd.element();
    Series t = ring.tautological();
    Series beta = ring.lift(rnd.element()) + t * ring.lift(rnd.element()) +
                  t.pow(static_cast<unsigned>(rnd.pick(1, 4))) * ring.lift(rnd.element());
    o.expect(ring.pushforward(ring.lift(alpha) * beta) == alpha * ring.pushforward(beta),
             "instance " + std::to_string(i) + " " + law.name());
  }
  return o;
}

// 14
Outcome determinism(const std::string &occ) {
  Outcome o;
  if (occ.empty()) {
    o.expect(false, "no occ binary given");
    return o;
  }
  for (const auto &suite : suite_names()) {
    int s1 = 0, s2 = 0;
    std::string cmd = "'" + occ + "' check " + suite;
    std::string first = run_command(cmd, s1), second = run_command(cmd, s2);
    o.expect(s1 == 0 && s2 == 0, suite + " exit status");
    o.expect(!first.empty() && first == second, suite + " output differs");
    std::string j1 = run_command(cmd + " --json", s1), j2 = run_command(cmd + " --json", s2);
    o.expect(!j1.empty() && j1 == j2, suite + " json output differs");
  }
  return o;
}

}  // namespace

int main(int argc, char **argv) {
  std::string occ = argc > 1 ? argv[1] : "";
  struct Criterion {
    const char *name;
    double budget;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"formal group law axioms, N=6", 30, axioms},
      {"inverse and n-series, N=6", 0, inverse_and_nseries},
      {"specialization of the universal law, N=8", 0, specialization},
      {"Whitney formula, 50 random split bundles", 0, whitney},
      {"projective bundle relation, r<=3", 0, relation},
      {"pushforward of 1 on P(L+O), universal N=6", 60, p1_pushforward},
      {"K-theory Euler characteristics", 0, chi},
      {"Riemann-Roch, r in {2,3}, k in 0..4", 120, grr},
      {"Todd and twist identities, N=8", 0, todd_identities},
      {"geometric formal group law", 600, fgl_theorem},
      {"ratio identity for P(L+O), N=6", 0, ratio_identity},
      {"pushforward recursion, 20 instances", 0, recursion},
      {"projection formula, 20 instances", 0, projection_formula},
      {"determinism of occ check", 0, [&] { return determinism(occ); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto &c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && secs > c.budget) {
      o.pass = false;
      o.detail = "over the time budget";
    }
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << ". " << c.name << " (" << o.checks
         << " checks, ";
    line.precision(2);
    line << std::fixed << secs << " s)";
    if (!o.pass) line << ": " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed ? "FAIL" : "PASS") << " acceptance: " << criteria.size() - failed << "/"
            << criteria.size() << std::endl;
  return failed ? 1 : 0;
}
