#include "occ/fgl.hpp"

#include "occ/error.hpp"

namespace occ {

std::string law_name(LawKind kind) {
  switch (kind) {
    case LawKind::additive: return "additive";
    case LawKind::multiplicative: return "multiplicative";
    case LawKind::universal: return "universal";
    case LawKind::custom: return "custom";
  }
  return "custom";
}

LawKind parse_law_kind(std::string_view name) {
  if (name == "additive") return LawKind::additive;
  if (name == "multiplicative") return LawKind::multiplicative;
  if (name == "universal" || name == "universal-rational") return LawKind::universal;
  throw Error(Errc::invalid_argument, "unknown law '" + std::string(name) + "'");
}

std::string generator_name(int i) { return "m" + std::to_string(i); }

std::vector<Variable> generator_variables(int count) {
  std::vector<Variable> out;
  for (int i = 1; i <= count; ++i) out.push_back({generator_name(i), -i, false});
  return out;
}

Series compose_series(const std::vector<Series> &coeffs, const Series &argument) {
  const auto &ctx = argument.context();
  if (!argument.is_zero() && *argument.min_weight() < 1)
    throw Error(Errc::non_nilpotent_substitution, argument.to_string());
  if (coeffs.empty()) return Series(ctx);
  std::size_t top = std::min<std::size_t>(coeffs.size() - 1, ctx->truncation());
  Series acc = coeffs[top];
  for (std::size_t i = top; i-- > 0;) acc = mul(acc, argument) + coeffs[i];
  return acc;
}

namespace {

ContextPtr law_context(int generators, int truncation, CoefficientMode mode) {
  auto vars = generator_variables(generators);
  vars.push_back({"x"});
  vars.push_back({"y"});
  return Context::make(std::move(vars), truncation, mode);
}

// exp(log x + log y) with log x = x + sum m_i x^(i+1).
Series universal_series(int n) {
  auto gens = generator_variables(n - 1);
  auto zvars = gens;
  zvars.push_back({"z"});
  auto zctx = Context::make(zvars, n);
  auto lctx = law_context(n - 1, n, CoefficientMode::rationals);

  auto log_coeffs = [n](const ContextPtr &c) {
    std::vector<Series> lc(n + 1, Series(c));
    lc[1] = Series::constant(c, 1);
    for (int k = 2; k <= n; ++k) lc[k] = Series::variable(c, generator_name(k - 1));
    return lc;
  };

  // exp as the compositional inverse of log, one weight at a time.
  auto lz = log_coeffs(zctx);
  Series e = Series::variable(zctx, "z");
  for (int k = 2; k <= n; ++k) e -= compose_series(lz, e).component(k);

  auto lx = log_coeffs(lctx);
  Series sum = compose_series(lx, Series::variable(lctx, "x")) +
               compose_series(lx, Series::variable(lctx, "y"));
  return substitute(e, {{"z", sum}}, lctx);
}

Series solve_inverse(const Series &f) {
  const auto &ctx = f.context();
  Series x = Series::variable(ctx, "x");
  Series iota = -x;
  for (int k = 2; k <= ctx->truncation(); ++k) {
    Series r = substitute(f, {{"y", iota}});
    iota -= r.component(k);
  }
  return iota;
}

}  // namespace

FormalGroupLaw::FormalGroupLaw(LawKind kind, Series series, Series source)
    : kind_(kind),
      context_(series.context()),
      series_(std::move(series)),
      inverse_(solve_inverse(series_)),
      source_(std::move(source)) {}

FormalGroupLaw FormalGroupLaw::make(LawKind kind, int truncation, CoefficientMode mode) {
  if (truncation < 1) throw Error(Errc::invalid_argument, "truncation must be at least 1");
  switch (kind) {
    case LawKind::additive:
    case LawKind::multiplicative: {
      auto ctx = law_context(0, truncation, mode);
      Series x = Series::variable(ctx, "x"), y = Series::variable(ctx, "y");
      Series f = x + y;
      if (kind == LawKind::multiplicative) f -= x * y;
      return FormalGroupLaw(kind, f, f);
    }
    case LawKind::universal:
      if (mode != CoefficientMode::rationals)
        throw Error(Errc::requires_rational, "universal law");
      {
        Series f = universal_series(truncation);
        return FormalGroupLaw(kind, f, f);
      }
    case LawKind::custom:
      break;
  }
  throw Error(Errc::invalid_argument, "custom laws need an explicit series");
}

FormalGroupLaw FormalGroupLaw::custom(const Series &series) {
  const auto &ctx = series.context();
  for (const char *name : {"x", "y"}) {
    auto idx = ctx->index_of(name);
    if (!idx || !ctx->variable(*idx).nilpotent)
      throw Error(Errc::invalid_argument,
                  std::string("custom law needs nilpotent variable ") + name);
  }
  for (const auto &v : ctx->variables())
    if (v.nilpotent && v.name != "x" && v.name != "y")
      throw Error(Errc::invalid_argument, "custom law mentions class variable " + v.name);
  return FormalGroupLaw(LawKind::custom, series, series);
}

std::vector<Variable> FormalGroupLaw::coefficient_variables() const {
  std::vector<Variable> out;
  for (const auto &v : context_->variables())
    if (!v.nilpotent) out.push_back(v);
  return out;
}

FormalGroupLaw FormalGroupLaw::with_truncation(int truncation) const {
  if (truncation == this->truncation()) return *this;
  if (kind_ != LawKind::custom) return make(kind_, truncation, mode());
  auto ctx = source_.context()->with_truncation(truncation);
  return FormalGroupLaw(kind_, source_.embed(ctx), source_);
}

ContextPtr FormalGroupLaw::class_context(const std::vector<Variable> &classes,
                                         int truncation, int generators) const {
  std::vector<Variable> vars;
  if (kind_ == LawKind::universal)
    vars = generator_variables(generators < 0 ? truncation + 4 : generators);
  else
    vars = coefficient_variables();
  vars.insert(vars.end(), classes.begin(), classes.end());
  return Context::make(std::move(vars), truncation, mode());
}

Series FormalGroupLaw::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i + j > truncation())
    throw Error(Errc::out_of_range, "coefficient (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") beyond truncation");
  return slice(series_, {{"x", i}, {"y", j}});
}

Series FormalGroupLaw::nseries(int n) const {
  Series x = Series::variable(context_, "x");
  Series acc(context_);
  for (int k = 0; k < std::abs(n); ++k) acc = substitute(series_, {{"x", acc}, {"y", x}});
  if (n < 0) acc = substitute(inverse_, {{"x", acc}});
  return acc;
}

Series FormalGroupLaw::log() const {
  if (!context_->rational()) throw Error(Errc::requires_rational, "logarithm");
  Series x = Series::variable(context_, "x");
  Series y = Series::variable(context_, "y");
  Series l = x;
  for (int k = 2; k <= truncation(); ++k) {
    Series defect = substitute(l, {{"x", series_}}) - l - substitute(l, {{"x", y}});
    Series c = slice(defect.component(k), {{"x", k - 1}, {"y", 1}});
    l -= mul(c.scaled(Rational(1, k)), x.pow(k));
  }
  return l;
}

void FormalGroupLaw::check_target(const ContextPtr &target) const {
  if (target->truncation() > truncation())
    throw Error(Errc::law_mismatch, "law truncated at " + std::to_string(truncation()) +
                                        " below context truncation " +
                                        std::to_string(target->truncation()));
}

Series FormalGroupLaw::apply(const Series &a, const Series &b) const {
  if (!same_context(a.context(), b.context()))
    throw Error(Errc::incompatible_contexts, "law arguments");
  check_target(a.context());
  return substitute(series_, {{"x", a}, {"y", b}}, a.context());
}

Series FormalGroupLaw::apply_inverse(const Series &a) const {
  check_target(a.context());
  return substitute(inverse_, {{"x", a}}, a.context());
}

Series FormalGroupLaw::apply_nseries(int n, const Series &a) const {
  check_target(a.context());
  return substitute(nseries(n), {{"x", a}}, a.context());
}

bool FormalGroupLaw::operator==(const FormalGroupLaw &other) const {
  return kind_ == other.kind_ && series_ == other.series_;
}

namespace {

std::string first_term(const Series &diff, const std::vector<std::string> &names) {
  const auto &t = diff.terms().front();
  std::string out = "(";
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(t.exponents[diff.context()->require(names[k])]);
  }
  return out + ")";
}

AxiomResult compare(std::string axiom, const Series &lhs, const Series &rhs,
                    const std::vector<std::string> &names) {
  AxiomResult r{std::move(axiom), true, true, {}};
  Series diff = lhs - rhs;
  if (!diff.is_zero()) {
    r.pass = false;
    r.first_failure = first_term(diff, names);
  }
  return r;
}

}  // namespace

std::vector<AxiomResult> check_axioms(const FormalGroupLaw &law) {
  const auto &ctx = law.context();
  const Series &f = law.series();
  Series x = Series::variable(ctx, "x"), y = Series::variable(ctx, "y");
  Series zero(ctx);
  std::vector<AxiomResult> out;

  AxiomResult unit = compare("unit", substitute(f, {{"y", zero}}), x, {"x", "y"});
  if (unit.pass) unit = compare("unit", substitute(f, {{"x", zero}}), y, {"x", "y"});
  out.push_back(unit);

  out.push_back(compare("commutativity", f, substitute(f, {{"x", y}, {"y", x}}), {"x", "y"}));

  auto vars = law.coefficient_variables();
  vars.push_back({"x"});
  vars.push_back({"y"});
  vars.push_back({"z"});
  auto c3 = Context::make(vars, law.truncation(), law.mode());
  Series x3 = Series::variable(c3, "x"), y3 = Series::variable(c3, "y"),
         z3 = Series::variable(c3, "z");
  out.push_back(compare("associativity", law.apply(law.apply(x3, y3), z3),
                        law.apply(x3, law.apply(y3, z3)), {"x", "y", "z"}));

  AxiomResult homog{"homogeneity", true, true, {}};
  if (law.kind() == LawKind::additive || law.kind() == LawKind::universal) {
    auto deg = f.homogeneous_degree();
    if (deg != 1) {
      homog.pass = false;
      // first term whose degree differs from 1
      for (const auto &t : f.terms()) {
        int d = 0;
        for (std::size_t i = 0; i < t.exponents.size(); ++i)
          d += t.exponents[i] * ctx->variable(i).degree;
        if (d != 1) {
          homog.first_failure = "(" + std::to_string(t.exponents[ctx->require("x")]) + "," +
                                std::to_string(t.exponents[ctx->require("y")]) + ")";
          break;
        }
      }
    }
  } else {
    homog.applicable = false;
  }
  out.push_back(homog);
  return out;
}

}  // namespace occ
