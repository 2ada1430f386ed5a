#include "occ/series.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "occ/error.hpp"

namespace occ {

namespace {

struct ExponentsHash {
  std::size_t operator()(const Exponents &e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto b : e) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using Accumulator = std::unordered_map<Exponents, Rational, ExponentsHash>;

int weight_of(const Context &ctx, const Exponents &e) {
  int w = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] && ctx.variable(i).nilpotent) w += e[i];
  return w;
}

bool canonical_less(const Term &a, const Term &b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  return a.exponents > b.exponents;
}

void check_mode(const Context &ctx, const Rational &c) {
  if (!ctx.rational() && !is_integer(c))
    throw Error(Errc::invalid_argument,
                "non-integer coefficient " + to_string(c) + " in integer mode");
}

void require_same(const Series &a, const Series &b) {
  if (!same_context(a.context(), b.context()))
    throw Error(Errc::incompatible_contexts,
                a.context()->describe() + " vs " + b.context()->describe());
}

std::uint8_t add_exponent(unsigned a, unsigned b) {
  unsigned s = a + b;
  if (s > 255) throw Error(Errc::out_of_range, "exponent overflow");
  return static_cast<std::uint8_t>(s);
}

std::vector<Term> drain(const Context &ctx, Accumulator &acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto &[exps, c] : acc) {
    if (c == 0) continue;
    int w = weight_of(ctx, exps);
    if (w > ctx.truncation()) continue;
    check_mode(ctx, c);
    terms.push_back(Term{exps, std::move(c), w});
  }
  std::sort(terms.begin(), terms.end(), canonical_less);
  return terms;
}

}  // namespace

Series::Series(ContextPtr context) : context_(std::move(context)) {
  if (!context_) throw Error(Errc::invalid_argument, "null context");
}

Series Series::constant(ContextPtr context, const Rational &value) {
  return monomial(std::move(context), {}, value);
}

Series Series::variable(ContextPtr context, std::string_view name) {
  Exponents e(context->size(), 0);
  e[context->require(name)] = 1;
  return monomial(std::move(context), std::move(e), 1);
}

Series Series::monomial(ContextPtr context, Exponents exponents,
                        const Rational &coeff) {
  exponents.resize(context->size(), 0);
  std::vector<Term> terms;
  terms.push_back(Term{std::move(exponents), coeff, 0});
  return from_terms(std::move(context), std::move(terms));
}

Series Series::from_terms(ContextPtr context, std::vector<Term> terms) {
  Series out(std::move(context));
  Accumulator acc;
  for (auto &t : terms) {
    if (t.exponents.size() != out.context_->size())
      throw Error(Errc::invalid_argument, "exponent vector size mismatch");
    acc[t.exponents] += t.coeff;
  }
  out.terms_ = drain(*out.context_, acc);
  return out;
}

Rational Series::constant_term() const {
  if (!terms_.empty()) {
    const auto &t = terms_.front();
    if (std::all_of(t.exponents.begin(), t.exponents.end(),
                    [](auto e) { return e == 0; }))
      return t.coeff;
  }
  return 0;
}

Rational Series::coefficient(const Exponents &exponents) const {
  for (const auto &t : terms_)
    if (t.exponents == exponents) return t.coeff;
  return 0;
}

Rational Series::coefficient(const std::map<std::string, int> &monomial) const {
  Exponents e(context_->size(), 0);
  for (const auto &[name, exp] : monomial) {
    auto idx = context_->index_of(name);
    if (!idx) return exp == 0 ? coefficient(e) : Rational(0);
    e[*idx] = static_cast<std::uint8_t>(exp);
  }
  return coefficient(e);
}

std::optional<int> Series::min_weight() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().weight;
}

std::optional<int> Series::max_weight() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().weight;
}

Series Series::component(int weight) const {
  Series out(context_);
  for (const auto &t : terms_)
    if (t.weight == weight) out.terms_.push_back(t);
  return out;
}

Series Series::truncated(int weight) const {
  Series out(context_);
  for (const auto &t : terms_)
    if (t.weight <= weight) out.terms_.push_back(t);
  return out;
}

std::optional<int> Series::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto &t : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      d += t.exponents[i] * context_->variable(i).degree;
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

bool Series::mentions(std::string_view name) const { return degree_in(name) > 0; }

int Series::degree_in(std::string_view name) const {
  auto idx = context_->index_of(name);
  if (!idx) return 0;
  int d = 0;
  for (const auto &t : terms_) d = std::max<int>(d, t.exponents[*idx]);
  return d;
}

Series Series::embed(const ContextPtr &destination) const {
  if (same_context(context_, destination)) {
    Series out(destination);
    out.terms_ = terms_;
    return out;
  }
  std::vector<std::optional<std::size_t>> map(context_->size());
  for (std::size_t i = 0; i < context_->size(); ++i)
    map[i] = destination->index_of(context_->variable(i).name);
  Accumulator acc;
  for (const auto &t : terms_) {
    Exponents e(destination->size(), 0);
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (!t.exponents[i]) continue;
      if (!map[i])
        throw Error(Errc::incompatible_contexts,
                    "variable '" + context_->variable(i).name +
                        "' missing in " + destination->describe());
      e[*map[i]] = t.exponents[i];
    }
    acc[std::move(e)] += t.coeff;
  }
  Series out(destination);
  out.terms_ = drain(*destination, acc);
  return out;
}

Series Series::operator-() const {
  Series out = *this;
  for (auto &t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Series &Series::operator+=(const Series &other) {
  require_same(*this, other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = other.terms_.begin(), be = other.terms_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && canonical_less(*a, *b))) {
      merged.push_back(std::move(*a++));
    } else if (a == ae || canonical_less(*b, *a)) {
      merged.push_back(*b++);
    } else {
      Term t = std::move(*a++);
      t.coeff += b->coeff;
      ++b;
      if (t.coeff != 0) merged.push_back(std::move(t));
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Series &Series::operator-=(const Series &other) { return *this += -other; }

Series &Series::operator*=(const Series &other) {
  *this = mul(*this, other);
  return *this;
}

Series operator*(const Series &a, const Series &b) { return mul(a, b); }

bool operator==(const Series &a, const Series &b) {
  if (!same_context(a.context_, b.context_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exponents != b.terms_[i].exponents ||
        a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

Series Series::scaled(const Rational &factor) const {
  if (factor == 0) return Series(context_);
  Series out = *this;
  for (auto &t : out.terms_) {
    t.coeff *= factor;
    check_mode(*context_, t.coeff);
  }
  return out;
}

Series Series::pow(unsigned exponent) const {
  Series result = constant(context_, 1);
  Series base = *this;
  while (exponent) {
    if (exponent & 1u) result = mul(result, base);
    exponent >>= 1;
    if (exponent) base = mul(base, base);
  }
  return result;
}

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &t : terms_) {
    bool negative = sgn(t.coeff) < 0;
    Rational mag = abs(t.coeff);
    std::string mono;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (!t.exponents[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += context_->variable(i).name;
      if (t.exponents[i] > 1) mono += "^" + std::to_string(t.exponents[i]);
    }
    std::string body;
    if (mono.empty())
      body = occ::to_string(mag);
    else if (mag == 1)
      body = mono;
    else
      body = occ::to_string(mag) + "*" + mono;
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

Series mul(const Series &a, const Series &b) {
  require_same(a, b);
  const auto &ctx = *a.context();
  const int n = ctx.truncation();
  Series out(a.context());
  if (a.is_zero() || b.is_zero()) return out;
  Accumulator acc;
  acc.reserve(a.size() * 2 + b.size() * 2);
  Exponents scratch(ctx.size());
  Rational prod;
  for (const auto &ta : a.terms()) {
    if (ta.weight + b.terms().front().weight > n) break;
    for (const auto &tb : b.terms()) {
      if (ta.weight + tb.weight > n) break;
      for (std::size_t i = 0; i < scratch.size(); ++i)
        scratch[i] = add_exponent(ta.exponents[i], tb.exponents[i]);
      mpq_mul(prod.get_mpq_t(), ta.coeff.get_mpq_t(), tb.coeff.get_mpq_t());
      auto it = acc.find(scratch);
      if (it == acc.end())
        acc.emplace(scratch, prod);
      else
        it->second += prod;
    }
  }
  return Series::from_terms(a.context(), [&] {
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto &[e, c] : acc)
      if (c != 0) terms.push_back(Term{e, std::move(c), 0});
    return terms;
  }());
}

Series slice(const Series &s, const std::map<std::string, int> &monomial) {
  const auto &ctx = s.context();
  std::vector<std::pair<std::size_t, int>> fixed;
  for (const auto &[name, e] : monomial) {
    auto idx = ctx->index_of(name);
    if (!idx) {
      if (e != 0) return Series(ctx);
      continue;
    }
    fixed.emplace_back(*idx, e);
  }
  std::vector<Term> out;
  for (const auto &t : s.terms()) {
    bool match = std::all_of(fixed.begin(), fixed.end(), [&](const auto &f) {
      return t.exponents[f.first] == f.second;
    });
    if (!match) continue;
    Term copy = t;
    for (const auto &f : fixed) copy.exponents[f.first] = 0;
    out.push_back(std::move(copy));
  }
  return Series::from_terms(ctx, std::move(out));
}

namespace {

struct Image {
  enum Kind { missing, zero, monomial, general } kind = missing;
  Exponents exps;  // destination exponents for monomial images
  Rational coeff;
  const Series *series = nullptr;
  int min_weight = 0;  // lower bound for the weight of the image
};

class Substituter {
 public:
  Substituter(const Series &target, const Assignment &assignment,
              const ContextPtr &dest)
      : src_(*target.context()), dest_(dest) {
    for (const auto &[name, img] : assignment) {
      if (!src_.contains(name))
        throw Error(Errc::invalid_argument,
                    "substitution for unknown variable '" + name + "'");
      if (!same_context(img.context(), dest))
        throw Error(Errc::incompatible_contexts,
                    "image of '" + name + "' lives in " +
                        img.context()->describe());
    }
    images_.resize(src_.size());
    for (std::size_t i = 0; i < src_.size(); ++i) {
      const auto &var = src_.variable(i);
      auto &im = images_[i];
      auto it = assignment.find(var.name);
      if (it == assignment.end()) {
        auto idx = dest->index_of(var.name);
        if (idx) {
          im.kind = Image::monomial;
          im.exps.assign(dest->size(), 0);
          im.exps[*idx] = 1;
          im.coeff = 1;
          im.min_weight = dest->variable(*idx).nilpotent ? 1 : 0;
        }
        continue;
      }
      const Series &img = it->second;
      if (var.nilpotent && !img.is_zero() && *img.min_weight() < 1)
        throw Error(Errc::non_nilpotent_substitution,
                    var.name + " -> " + img.to_string());
      if (img.is_zero()) {
        im.kind = Image::zero;
      } else if (img.size() == 1) {
        im.kind = Image::monomial;
        im.exps = img.terms()[0].exponents;
        im.coeff = img.terms()[0].coeff;
        im.min_weight = img.terms()[0].weight;
      } else {
        im.kind = Image::general;
        im.series = &img;
        im.min_weight = *img.min_weight();
        general_.push_back(i);
      }
    }
    powers_.resize(src_.size());
  }

  Series run(const Series &target) {
    std::vector<const Term *> terms;
    terms.reserve(target.size());
    for (const auto &t : target.terms()) terms.push_back(&t);
    return recurse(terms, 0);
  }

 private:
  const Series &power(std::size_t var, unsigned e) {
    auto &cache = powers_[var];
    if (cache.empty()) cache.push_back(Series::constant(dest_, 1));
    while (cache.size() <= e) cache.push_back(mul(cache.back(), *images_[var].series));
    return cache[e];
  }

  Series leaf(const std::vector<const Term *> &terms) {
    Accumulator acc;
    Exponents e(dest_->size());
    const int n = dest_->truncation();
    for (const Term *t : terms) {
      int bound = 0;
      for (std::size_t i = 0; i < t->exponents.size(); ++i)
        bound += t->exponents[i] * images_[i].min_weight;
      if (bound > n) continue;
      std::fill(e.begin(), e.end(), 0);
      Rational c = t->coeff;
      bool vanishes = false;
      for (std::size_t i = 0; i < t->exponents.size() && !vanishes; ++i) {
        unsigned k = t->exponents[i];
        if (!k) continue;
        const auto &im = images_[i];
        switch (im.kind) {
          case Image::missing:
            throw Error(Errc::incompatible_contexts,
                        "variable '" + src_.variable(i).name +
                            "' has no image in " + dest_->describe());
          case Image::zero:
            vanishes = true;
            break;
          case Image::general:
            break;  // handled by the caller
          case Image::monomial: {
            for (std::size_t j = 0; j < e.size(); ++j)
              if (im.exps[j]) e[j] = add_exponent(e[j], im.exps[j] * k);
            if (im.coeff != 1) {
              Rational p;
              mpz_pow_ui(mpq_numref(p.get_mpq_t()), im.coeff.get_num_mpz_t(), k);
              mpz_pow_ui(mpq_denref(p.get_mpq_t()), im.coeff.get_den_mpz_t(), k);
              c *= p;
            }
            break;
          }
        }
      }
      if (vanishes || weight_of(*dest_, e) > n) continue;
      acc[e] += c;
    }
    Series out(dest_);
    std::vector<Term> list;
    for (auto &[ex, c] : acc)
      if (c != 0) list.push_back(Term{ex, std::move(c), 0});
    return Series::from_terms(dest_, std::move(list));
  }

  Series recurse(const std::vector<const Term *> &terms, std::size_t level) {
    if (level == general_.size()) return leaf(terms);
    std::size_t var = general_[level];
    std::map<unsigned, std::vector<const Term *>> groups;
    for (const Term *t : terms) groups[t->exponents[var]].push_back(t);
    Series result(dest_);
    for (auto &[e, group] : groups) {
      Series inner = recurse(group, level + 1);
      if (inner.is_zero()) continue;
      result += e == 0 ? inner : mul(power(var, e), inner);
    }
    return result;
  }

  const Context &src_;
  ContextPtr dest_;
  std::vector<Image> images_;
  std::vector<std::size_t> general_;
  std::vector<std::vector<Series>> powers_;
};

}  // namespace

Series substitute(const Series &target, const Assignment &assignment) {
  return substitute(target, assignment, target.context());
}

Series substitute(const Series &target, const Assignment &assignment,
                  const ContextPtr &destination) {
  Substituter s(target, assignment, destination);
  return s.run(target);
}

Series invert_unit(const Series &a) {
  const auto &ctx = a.context();
  Rational c = a.constant_term();
  for (const auto &t : a.terms()) {
    if (t.weight > 0) break;
    if (std::any_of(t.exponents.begin(), t.exponents.end(),
                    [](auto e) { return e != 0; }))
      throw Error(Errc::not_a_unit,
                  "weight-0 part is not a constant in " + a.to_string());
  }
  if (c == 0) throw Error(Errc::not_a_unit, "zero constant term");
  if (!ctx->rational() && abs(c) != 1)
    throw Error(Errc::not_a_unit,
                "constant term " + to_string(c) + " in integer mode");
  Series x = Series::constant(ctx, 1 / c);
  Series two = Series::constant(ctx, 2);
  // Newton iteration doubles the number of correct weights each round.
  for (int correct = 0; correct < ctx->truncation(); correct = 2 * correct + 1)
    x = mul(x, two - mul(a, x));
  return x;
}

namespace {

using LexMap = std::map<Exponents, Rational, std::greater<>>;

bool divides(const Exponents &d, const Exponents &e) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > e[i]) return false;
  return true;
}

// Exact polynomial division of a homogeneous component by another.
Series polynomial_divide(const Series &num, const Series &den) {
  const auto &ctx = num.context();
  LexMap rem;
  for (const auto &t : num.terms()) rem[t.exponents] = t.coeff;
  LexMap dmap;
  for (const auto &t : den.terms()) dmap[t.exponents] = t.coeff;
  const auto &[lead_e, lead_c] = *dmap.begin();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!divides(lead_e, top->first))
      throw Error(Errc::not_divisible, "leading monomial does not divide");
    Exponents qe(top->first.size());
    for (std::size_t i = 0; i < qe.size(); ++i) qe[i] = top->first[i] - lead_e[i];
    Rational qc = top->second / lead_c;
    if (!ctx->rational() && !is_integer(qc))
      throw Error(Errc::not_divisible, "non-integral quotient coefficient");
    for (const auto &[de, dc] : dmap) {
      Exponents e(qe.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = add_exponent(qe[i], de[i]);
      auto &slot = rem[e];
      slot -= qc * dc;
      if (slot == 0) rem.erase(e);
    }
    quotient.push_back(Term{std::move(qe), std::move(qc), 0});
  }
  return Series::from_terms(ctx, std::move(quotient));
}

}  // namespace

Series exact_divide(const Series &num, const Series &den) {
  require_same(num, den);
  if (den.is_zero()) throw Error(Errc::not_divisible, "division by zero");
  const auto &ctx = num.context();
  Series q(ctx);
  if (num.is_zero()) return q;
  const int dmin = *den.min_weight();
  const Series lead = den.component(dmin);
  Series rem = num;
  for (int w = 0; w + dmin <= ctx->truncation(); ++w) {
    Series part = rem.component(w + dmin);
    if (part.is_zero()) continue;
    Series qk = polynomial_divide(part, lead);
    q += qk;
    rem -= mul(qk, den);
  }
  if (!rem.is_zero())
    throw Error(Errc::not_divisible,
                "nonzero remainder at weight " + std::to_string(*rem.min_weight()));
  return q;
}

bool is_symmetric(const Series &p, const std::vector<std::string> &roots) {
  const auto &ctx = p.context();
  std::vector<std::size_t> idx;
  for (const auto &r : roots) idx.push_back(ctx->require(r));
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
    std::vector<Term> swapped(p.terms().begin(), p.terms().end());
    for (auto &t : swapped) std::swap(t.exponents[idx[k]], t.exponents[idx[k + 1]]);
    if (!(Series::from_terms(ctx, std::move(swapped)) == p)) return false;
  }
  return true;
}

namespace {

using RootKey = std::vector<std::uint8_t>;
using RootPoly = std::map<RootKey, Rational, std::greater<>>;

RootPoly multiply_root_poly(const RootPoly &a, const RootPoly &b) {
  RootPoly out;
  for (const auto &[ea, ca] : a)
    for (const auto &[eb, cb] : b) {
      RootKey e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = add_exponent(ea[i], eb[i]);
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

RootPoly elementary_root_poly(std::size_t r, std::size_t k) {
  RootPoly out;
  RootKey e(r, 0);
  std::fill(e.begin(), e.begin() + static_cast<long>(k), 1);
  // enumerate all 0/1 vectors with k ones
  std::sort(e.begin(), e.end());
  do {
    out[e] = 1;
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

}  // namespace

Series symmetric_reduce(const Series &p, const std::vector<std::string> &roots,
                        const std::vector<std::string> &targets) {
  const auto &ctx = p.context();
  const std::size_t r = roots.size();
  if (targets.size() != r)
    throw Error(Errc::invalid_argument, "need one target per root");
  std::vector<std::size_t> ridx, tidx;
  for (const auto &n : roots) ridx.push_back(ctx->require(n));
  for (const auto &n : targets) {
    tidx.push_back(ctx->require(n));
    if (std::find(roots.begin(), roots.end(), n) != roots.end())
      throw Error(Errc::invalid_argument, "target coincides with a root");
  }
  if (!is_symmetric(p, roots)) throw Error(Errc::not_symmetric, p.to_string());

  // Group by root exponents; the rest of the monomial rides along.
  std::map<RootKey, std::map<Exponents, Rational>, std::greater<>> groups;
  for (const auto &t : p.terms()) {
    RootKey key(r);
    Exponents rest = t.exponents;
    for (std::size_t i = 0; i < r; ++i) {
      key[i] = t.exponents[ridx[i]];
      rest[ridx[i]] = 0;
    }
    groups[key][rest] += t.coeff;
  }

  std::vector<RootPoly> elementary(r + 1);
  for (std::size_t k = 1; k <= r; ++k) elementary[k] = elementary_root_poly(r, k);
  std::map<RootKey, RootPoly> expansion_cache;

  std::vector<Term> result;
  while (!groups.empty()) {
    auto it = groups.begin();
    RootKey key = it->first;
    auto coeffs = std::move(it->second);
    groups.erase(it);
    for (auto c = coeffs.begin(); c != coeffs.end();)
      c = c->second == 0 ? coeffs.erase(c) : std::next(c);
    if (coeffs.empty()) continue;
    if (std::all_of(key.begin(), key.end(), [](auto e) { return e == 0; })) {
      for (auto &[rest, c] : coeffs) result.push_back(Term{rest, c, 0});
      continue;
    }
    for (std::size_t i = 0; i + 1 < r; ++i)
      if (key[i] < key[i + 1])
        throw Error(Errc::reduction_failed, "leading root exponents not a partition");
    // lambda_k = key[k-1] - key[k]
    RootKey lambda(r);
    for (std::size_t k = 0; k < r; ++k)
      lambda[k] = static_cast<std::uint8_t>(key[k] - (k + 1 < r ? key[k + 1] : 0));
    auto cached = expansion_cache.find(lambda);
    if (cached == expansion_cache.end()) {
      RootPoly prod;
      prod[RootKey(r, 0)] = 1;
      for (std::size_t k = 0; k < r; ++k)
        for (unsigned j = 0; j < lambda[k]; ++j)
          prod = multiply_root_poly(prod, elementary[k + 1]);
      cached = expansion_cache.emplace(lambda, std::move(prod)).first;
    }
    for (const auto &[rest, c] : coeffs) {
      Exponents e = rest;
      for (std::size_t k = 0; k < r; ++k) e[tidx[k]] = add_exponent(e[tidx[k]], lambda[k]);
      result.push_back(Term{std::move(e), c, 0});
      for (const auto &[rk, ec] : cached->second) {
        if (rk == key) continue;
        groups[rk][rest] -= ec * c;
      }
    }
  }
  Series out = Series::from_terms(ctx, std::move(result));
  for (const auto &n : roots)
    if (out.mentions(n)) throw Error(Errc::reduction_failed, "residual root " + n);
  return out;
}

Series elementary_symmetric(const ContextPtr &context,
                            std::span<const Series> values, int k) {
  if (k < 0) throw Error(Errc::out_of_range, "negative elementary index");
  std::vector<Series> e(static_cast<std::size_t>(k) + 1, Series(context));
  e[0] = Series::constant(context, 1);
  for (const auto &v : values)
    for (int j = k; j >= 1; --j) e[j] += mul(e[j - 1], v);
  return e[k];
}

Series compose_univariate(const std::vector<Rational> &coeffs,
                          const Series &argument) {
  const auto &ctx = argument.context();
  if (!argument.is_zero() && *argument.min_weight() < 1)
    throw Error(Errc::non_nilpotent_substitution, argument.to_string());
  if (coeffs.empty()) return Series(ctx);
  std::size_t top = std::min<std::size_t>(coeffs.size() - 1, ctx->truncation());
  Series acc = Series::constant(ctx, coeffs[top]);
  for (std::size_t i = top; i-- > 0;)
    acc = mul(acc, argument) + Series::constant(ctx, coeffs[i]);
  return acc;
}

}  // namespace occ
