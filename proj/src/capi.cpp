#include "occ/occ.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <memory>
#include <string>

#include "occ/error.hpp"
#include "occ/expr.hpp"
#include "occ/specializations.hpp"
#include "occ/suites.hpp"
#include "occ/task.hpp"

struct occ_law {
  occ::FormalGroupLaw law;
};
struct occ_context {
  occ::ContextPtr context;
};
struct occ_series {
  occ::Series series;
};
struct occ_report {
  occ::Report report;
  bool json = false;
};

namespace {

thread_local std::string last_error;

occ_status status_of(occ::Errc code) {
  using occ::Errc;
  switch (code) {
    case Errc::invalid_argument: return OCC_ERR_INVALID_ARGUMENT;
    case Errc::incompatible_contexts: return OCC_ERR_INCOMPATIBLE_CONTEXTS;
    case Errc::non_nilpotent_substitution: return OCC_ERR_NON_NILPOTENT_SUBSTITUTION;
    case Errc::not_a_unit: return OCC_ERR_NOT_A_UNIT;
    case Errc::not_divisible: return OCC_ERR_NOT_DIVISIBLE;
    case Errc::not_symmetric: return OCC_ERR_NOT_SYMMETRIC;
    case Errc::reduction_failed: return OCC_ERR_REDUCTION_FAILED;
    case Errc::requires_rational: return OCC_ERR_REQUIRES_RATIONAL;
    case Errc::variable_collision: return OCC_ERR_VARIABLE_COLLISION;
    case Errc::pushforward_not_polynomial: return OCC_ERR_PUSHFORWARD_NOT_POLYNOMIAL;
    case Errc::finiteness_violated: return OCC_ERR_FINITENESS_VIOLATED;
    case Errc::law_mismatch: return OCC_ERR_LAW_MISMATCH;
    case Errc::out_of_range: return OCC_ERR_OUT_OF_RANGE;
    case Errc::parse_error: return OCC_ERR_PARSE;
  }
  return OCC_ERR_INTERNAL;
}

occ_status fail(occ_status s, const std::string &msg) {
  last_error = msg;
  return s;
}

template <class F>
occ_status guard(F &&body) {
  try {
    body();
    last_error.clear();
    return OCC_OK;
  } catch (const occ::Error &e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return fail(OCC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(OCC_ERR_INTERNAL, e.what());
  }
}

#define OCC_REQUIRE(p)                                                   \
  do {                                                                   \
    if (!(p)) return fail(OCC_ERR_NULL_ARGUMENT, "null argument: " #p); \
  } while (0)

char *dup(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

occ_series *wrap(occ::Series s) { return new occ_series{std::move(s)}; }

occ_status report_out(occ_report **out, const std::function<occ::Report()> &make) {
  OCC_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = new occ_report{make(), false}; });
}

}  // namespace

extern "C" {

const char *occ_version(void) { return "1.0.0"; }

const char *occ_status_message(occ_status status) {
  switch (status) {
    case OCC_OK: return "ok";
    case OCC_ERR_NULL_ARGUMENT: return "null argument";
    case OCC_ERR_INTERNAL: return "internal error";
    default: break;
  }
  if (status > OCC_OK && status < OCC_ERR_NULL_ARGUMENT)
    return occ::errc_message(static_cast<occ::Errc>(status - 1));
  return "unknown status";
}

const char *occ_last_error(void) { return last_error.c_str(); }

void occ_string_free(char *text) { std::free(text); }

occ_status occ_law_new(const char *name, int truncation, occ_law **out) {
  OCC_REQUIRE(name && out);
  *out = nullptr;
  return guard([&] {
    *out = new occ_law{occ::FormalGroupLaw::make(occ::parse_law_kind(name), truncation)};
  });
}

occ_status occ_law_custom(const char *expression, int truncation, occ_law **out) {
  OCC_REQUIRE(expression && out);
  *out = nullptr;
  return guard([&] {
    if (truncation < 1) throw occ::Error(occ::Errc::invalid_argument, "truncation must be at least 1");
    auto ctx = occ::Context::make({{"x"}, {"y"}}, truncation);
    *out = new occ_law{occ::FormalGroupLaw::custom(occ::parse_expression(expression, ctx))};
  });
}

void occ_law_free(occ_law *law) { delete law; }

occ_status occ_law_series(const occ_law *law, occ_series **out) {
  OCC_REQUIRE(law && out);
  return guard([&] { *out = wrap(law->law.series()); });
}

occ_status occ_law_coefficient(const occ_law *law, int i, int j, occ_series **out) {
  OCC_REQUIRE(law && out);
  return guard([&] { *out = wrap(law->law.coefficient(i, j)); });
}

occ_status occ_law_inverse(const occ_law *law, occ_series **out) {
  OCC_REQUIRE(law && out);
  return guard([&] { *out = wrap(law->law.inverse()); });
}

occ_status occ_law_nseries(const occ_law *law, int n, occ_series **out) {
  OCC_REQUIRE(law && out);
  return guard([&] { *out = wrap(law->law.nseries(n)); });
}

occ_status occ_context_new(const occ_law *law, const char *const *classes, size_t count,
                           int truncation, occ_context **out) {
  OCC_REQUIRE(law && out && (classes || count == 0));
  *out = nullptr;
  return guard([&] {
    std::vector<occ::Variable> vars;
    for (size_t i = 0; i < count; ++i) {
      if (!classes[i]) throw occ::Error(occ::Errc::invalid_argument, "null class name");
      vars.push_back({classes[i]});
    }
    *out = new occ_context{law->law.class_context(vars, truncation)};
  });
}

void occ_context_free(occ_context *context) { delete context; }

occ_status occ_series_parse(const occ_context *context, const occ_law *law, const char *text,
                            occ_series **out) {
  OCC_REQUIRE(context && text && out);
  *out = nullptr;
  return guard([&] {
    *out = wrap(occ::parse_expression(text, context->context, law ? &law->law : nullptr));
  });
}

void occ_series_free(occ_series *series) { delete series; }

occ_status occ_series_add(const occ_series *a, const occ_series *b, occ_series **out) {
  OCC_REQUIRE(a && b && out);
  return guard([&] {
    if (!occ::same_context(a->series.context(), b->series.context()))
      throw occ::Error(occ::Errc::incompatible_contexts);
    *out = wrap(a->series + b->series);
  });
}

occ_status occ_series_mul(const occ_series *a, const occ_series *b, occ_series **out) {
  OCC_REQUIRE(a && b && out);
  return guard([&] { *out = wrap(a->series * b->series); });
}

occ_status occ_series_equal(const occ_series *a, const occ_series *b, int *out) {
  OCC_REQUIRE(a && b && out);
  return guard([&] { *out = a->series == b->series ? 1 : 0; });
}

occ_status occ_series_to_string(const occ_series *series, char **out) {
  OCC_REQUIRE(series && out);
  return guard([&] { *out = dup(series->series.to_string()); });
}

occ_status occ_series_to_json(const occ_series *series, char **out) {
  OCC_REQUIRE(series && out);
  return guard([&] { *out = dup(occ::series_to_json(series->series)); });
}

occ_status occ_pbf(const occ_law *law, const occ_context *context, const char *const *roots,
                   size_t rank, const char *element, occ_pbf_action action, occ_series **out) {
  OCC_REQUIRE(law && context && element && out && (roots || rank == 0));
  *out = nullptr;
  return guard([&] {
    std::vector<occ::Series> rs;
    for (size_t i = 0; i < rank; ++i) {
      if (!roots[i]) throw occ::Error(occ::Errc::invalid_argument, "null root");
      rs.push_back(occ::parse_expression(roots[i], context->context, &law->law));
    }
    occ::ProjBundleRing ring(occ::SplitBundle(law->law, context->context, rs));
    occ::Series e = occ::parse_expression(element, ring.total(), &ring.law());
    if (action == OCC_PBF_REDUCE)
      *out = wrap(ring.reduce(e));
    else if (action == OCC_PBF_PUSHFORWARD)
      *out = wrap(ring.pushforward(e));
    else
      throw occ::Error(occ::Errc::invalid_argument, "unknown action");
  });
}

occ_status occ_run_task(const char *text, const char *name, occ_report **out) {
  OCC_REQUIRE(text && out);
  *out = nullptr;
  return guard([&] {
    auto task = occ::parse_task(text);
    *out = new occ_report{occ::run_task(task, name ? name : "task"), task.json};
  });
}

occ_status occ_run_suite(const char *name, int truncation, occ_report **out) {
  OCC_REQUIRE(name);
  return report_out(out, [&] {
    return occ::run_suite(name, truncation > 0 ? std::optional<int>(truncation) : std::nullopt);
  });
}

occ_status occ_grr(int rank, int k, occ_report **out) {
  return report_out(out, [&] {
    auto g = occ::grr_check(rank, k);
    occ::Report rep{"grr r=" + std::to_string(rank) + " k=" + std::to_string(k), {}};
    rep.add("additive side", occ::to_string(g.oracle), occ::to_string(g.lhs));
    rep.add("multiplicative side", occ::to_string(g.oracle), occ::to_string(g.rhs));
    return rep;
  });
}

occ_status occ_chi(int rank, int k, occ_report **out) {
  return report_out(out, [&] {
    occ::Report rep{"chi r=" + std::to_string(rank) + " k=" + std::to_string(k), {}};
    rep.add("pushforward of O(k)", occ::to_string(occ::k_chi_oracle(rank, k)),
            occ::to_string(occ::k_pushforward(rank, k)));
    return rep;
  });
}

occ_status occ_tower(const char *law, int depth, occ_report **out) {
  OCC_REQUIRE(law);
  return report_out(out, [&] {
    if (depth < 0) throw occ::Error(occ::Errc::invalid_argument, "depth must be non-negative");
    auto f = occ::FormalGroupLaw::make(occ::parse_law_kind(law), std::max(1, depth));
    auto classes = occ::tower_classes(f, depth);
    occ::Report rep{"tower " + f.name() + " depth " + std::to_string(depth), {}};
    for (size_t i = 0; i < classes.size(); ++i)
      rep.result("[P" + std::to_string(i) + "]", classes[i]);
    return rep;
  });
}

occ_status occ_fglcheck(const char *law, int truncation, occ_report **out) {
  OCC_REQUIRE(law);
  return report_out(out, [&] {
    auto kind = occ::parse_law_kind(law);
    int n = truncation > 0 ? truncation : (kind == occ::LawKind::universal ? 5 : 6);
    auto c = occ::geometric_fgl_check(occ::FormalGroupLaw::make(kind, n), n);
    occ::Report rep{"fglcheck " + occ::law_name(kind) + " N=" + std::to_string(n), {}};
    rep.result("[P1]", c.p1);
    rep.result("[P2]", c.p2);
    rep.result("[P3]", c.p3);
    rep.add("F(u1,u2)(1 + u1 u2 ([P2] - [P3])) = u1 + u2 - u1 u2 [P1]", c.rhs.to_string(),
            c.lhs.to_string(), c.pass);
    return rep;
  });
}

occ_status occ_cf(int truncation, occ_report **out) {
  return report_out(out, [&] { return occ::conner_floyd_check(truncation > 0 ? truncation : 4); });
}

void occ_report_free(occ_report *report) { delete report; }

int occ_report_pass(const occ_report *report) { return report && report->report.pass() ? 1 : 0; }

size_t occ_report_size(const occ_report *report) {
  return report ? report->report.items.size() : 0;
}

int occ_report_wants_json(const occ_report *report) { return report && report->json ? 1 : 0; }

occ_status occ_report_render(const occ_report *report, int json, char **out) {
  OCC_REQUIRE(report && out);
  return guard([&] {
    *out = dup(json ? occ::to_json(report->report) : occ::to_text(report->report));
  });
}

}  // extern "C"
