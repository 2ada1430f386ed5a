#include "occ/task.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <memory>

#include "occ/error.hpp"
#include "occ/expr.hpp"
#include "occ/specializations.hpp"

namespace occ {

namespace {

[[noreturn]] void fail_at(std::size_t line, std::size_t column, const std::string &what) {
  throw Error(Errc::parse_error,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what,
              column);
}

[[noreturn]] void fail_at(const TaskLine &where, const std::string &what) {
  fail_at(where.line, where.column, what);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

TaskLine trimmed(TaskLine l) {
  std::size_t a = 0;
  while (a < l.text.size() && is_space(l.text[a])) ++a;
  std::size_t b = l.text.size();
  while (b > a && is_space(l.text[b - 1])) --b;
  return {l.line, l.column + a, l.text.substr(a, b - a)};
}

std::vector<TaskLine> words(const TaskLine &l) {
  std::vector<TaskLine> out;
  std::size_t i = 0;
  while (i < l.text.size()) {
    while (i < l.text.size() && is_space(l.text[i])) ++i;
    std::size_t j = i;
    while (j < l.text.size() && !is_space(l.text[j])) ++j;
    if (j > i) out.push_back({l.line, l.column + i, l.text.substr(i, j - i)});
    i = j;
  }
  return out;
}

// splits at the first word; returns {word, rest}
std::pair<TaskLine, TaskLine> head(const TaskLine &l) {
  TaskLine t = trimmed(l);
  std::size_t j = 0;
  while (j < t.text.size() && !is_space(t.text[j])) ++j;
  TaskLine first{t.line, t.column, t.text.substr(0, j)};
  TaskLine rest = trimmed({t.line, t.column + j, t.text.substr(j)});
  return {first, rest};
}

// comma split at parenthesis depth 0
std::vector<TaskLine> split_commas(const TaskLine &l) {
  std::vector<TaskLine> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= l.text.size(); ++i) {
    if (i == l.text.size() || (l.text[i] == ',' && depth == 0)) {
      out.push_back(trimmed({l.line, l.column + start, l.text.substr(start, i - start)}));
      start = i + 1;
    } else if (l.text[i] == '(') {
      ++depth;
    } else if (l.text[i] == ')') {
      --depth;
    }
  }
  return out;
}

int to_int(const TaskLine &w) {
  int v = 0;
  auto [p, ec] = std::from_chars(w.text.data(), w.text.data() + w.text.size(), v);
  if (ec != std::errc() || p != w.text.data() + w.text.size())
    fail_at(w, "expected an integer, got '" + w.text + "'");
  return v;
}

Series parse_at(const TaskLine &e, const ContextPtr &ctx, const FormalGroupLaw *law) {
  if (e.text.empty()) fail_at(e, "missing expression");
  try {
    return parse_expression(e.text, ctx, law);
  } catch (const Error &err) {
    if (err.code() != Errc::parse_error) fail_at(e, err.what());
    std::string detail = err.detail();
    auto colon = detail.find(": ");
    if (err.position() && colon != std::string::npos) detail = detail.substr(colon + 2);
    fail_at(e.line, e.column + err.position().value_or(0), detail);
  }
}

}  // namespace

Task parse_task(std::string_view text) {
  Task task;
  bool have_law = false, have_trunc = false, have_mode = false, have_output = false,
       have_vars = false;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string raw(text.substr(pos, end - pos));
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    TaskLine line = trimmed({line_no, 1, raw});
    if (line.text.empty()) continue;
    auto [key, rest] = head(line);
    auto once = [&](bool &seen) {
      if (seen) fail_at(key, "duplicate '" + key.text + "'");
      seen = true;
    };
    auto single = [&]() {
      auto w = words(rest);
      if (w.size() != 1) fail_at(rest.text.empty() ? key : rest, "'" + key.text + "' takes one value");
      return w[0];
    };

    if (key.text == "law") {
      once(have_law);
      task.law_line = line_no;
      auto [name, expr] = head(rest);
      if (name.text == "custom") {
        if (expr.text.empty()) fail_at(name, "custom law needs an expression in x and y");
        task.law = "custom";
        task.custom_law = expr;
      } else {
        auto w = single();
        try {
          parse_law_kind(w.text);
        } catch (const Error &) {
          fail_at(w, "unknown law '" + w.text + "'");
        }
        task.law = w.text;
      }
    } else if (key.text == "truncation") {
      once(have_trunc);
      auto w = single();
      task.truncation = to_int(w);
      if (task.truncation < 1) fail_at(w, "truncation must be at least 1");
    } else if (key.text == "mode") {
      once(have_mode);
      auto w = single();
      if (w.text == "integers")
        task.mode = CoefficientMode::integers;
      else if (w.text == "rationals")
        task.mode = CoefficientMode::rationals;
      else
        fail_at(w, "mode must be integers or rationals");
    } else if (key.text == "output") {
      once(have_output);
      auto w = single();
      if (w.text != "text" && w.text != "json") fail_at(w, "output must be text or json");
      task.json = w.text == "json";
    } else if (key.text == "variables") {
      once(have_vars);
      for (const auto &w : words(rest)) {
        Variable v{w.text};
        if (auto colon = w.text.find(':'); colon != std::string::npos) {
          v.name = w.text.substr(0, colon);
          v.degree = to_int({w.line, w.column + colon + 1, w.text.substr(colon + 1)});
          if (v.degree < 1) fail_at(w, "class variables need positive degree");
        }
        if (!valid_identifier(v.name)) fail_at(w, "bad variable name '" + v.name + "'");
        for (const auto &o : task.variables)
          if (o.name == v.name) fail_at(w, "duplicate variable '" + v.name + "'");
        task.variables.push_back(v);
      }
    } else if (key.text == "bundle") {
      auto eq = rest.text.find('=');
      if (eq == std::string::npos) fail_at(rest, "expected 'bundle NAME = root, ...'");
      TaskLine name = trimmed({rest.line, rest.column, rest.text.substr(0, eq)});
      if (!valid_identifier(name.text)) fail_at(name, "bad bundle name '" + name.text + "'");
      for (const auto &b : task.bundles)
        if (b.name == name.text) fail_at(name, "duplicate bundle '" + name.text + "'");
      TaskLine list = trimmed({rest.line, rest.column + eq + 1, rest.text.substr(eq + 1)});
      TaskBundle b{name.text, {}};
      if (!list.text.empty()) b.roots = split_commas(list);
      for (const auto &r : b.roots)
        if (r.text.empty()) fail_at(r, "empty root");
      task.bundles.push_back(std::move(b));
    } else if (key.text == "action") {
      auto [kind, args] = head(rest);
      if (kind.text.empty()) fail_at(key, "missing action kind");
      auto kinds = task_action_kinds();
      if (std::find(kinds.begin(), kinds.end(), kind.text) == kinds.end())
        fail_at(kind, "unknown action '" + kind.text + "'");
      task.actions.push_back({line_no, kind.text, args});
    } else {
      fail_at(key, "unknown keyword '" + key.text + "'");
    }
  }
  if (!have_law) fail_at(line_no, 1, "missing 'law'");
  if (!have_trunc) fail_at(line_no, 1, "missing 'truncation'");
  if (task.actions.empty()) fail_at(line_no, 1, "no actions");
  return task;
}

std::vector<std::string> task_action_kinds() {
  return {"law",      "coefficient", "inverse",  "nseries", "log",      "check-axioms",
          "eval",     "equal",       "specialize", "chern", "total-chern", "euler",
          "ch_a",     "ch_m",        "todd",     "relation", "reduce",  "pushforward",
          "whitney",  "tower",       "fglcheck", "grr",      "chi",     "cf"};
}

namespace {

using Step = std::function<void(Report &)>;

struct Runner {
  const Task &task;
  std::unique_ptr<FormalGroupLaw> law;
  ContextPtr ctx;
  std::map<std::string, SplitBundle> bundles;
  std::map<std::string, std::shared_ptr<ProjBundleRing>> rings;

  explicit Runner(const Task &t) : task(t) {
    if (task.custom_law) {
      auto lctx = Context::make({{"x"}, {"y"}}, task.truncation, task.mode);
      law = std::make_unique<FormalGroupLaw>(
          FormalGroupLaw::custom(parse_at(*task.custom_law, lctx, nullptr)));
    } else {
      try {
        law = std::make_unique<FormalGroupLaw>(
            FormalGroupLaw::make(parse_law_kind(task.law), task.truncation, task.mode));
      } catch (const Error &e) {
        fail_at(task.law_line, 1, e.what());
      }
    }
    try {
      ctx = law->class_context(task.variables, task.truncation);
    } catch (const Error &e) {
      fail_at(task.law_line, 1, e.what());
    }
    for (const auto &b : task.bundles) {
      std::vector<Series> roots;
      for (const auto &r : b.roots) roots.push_back(parse_at(r, ctx, law.get()));
      try {
        bundles.emplace(b.name, SplitBundle(*law, ctx, roots));
      } catch (const Error &e) {
        fail_at(b.roots.empty() ? TaskLine{} : b.roots.front(), e.what());
      }
    }
  }

  const SplitBundle &bundle(const TaskLine &w) const {
    auto it = bundles.find(w.text);
    if (it == bundles.end()) fail_at(w, "unknown bundle '" + w.text + "'");
    return it->second;
  }

  std::shared_ptr<ProjBundleRing> ring(const TaskLine &w) {
    auto it = rings.find(w.text);
    if (it != rings.end()) return it->second;
    const auto &b = bundle(w);
    try {
      auto r = std::make_shared<ProjBundleRing>(b);
      rings.emplace(w.text, r);
      return r;
    } catch (const Error &e) {
      fail_at(w, e.what());
    }
  }

  static void arity(const TaskAction &a, const std::vector<TaskLine> &w, std::size_t n) {
    if (w.size() != n)
      fail_at(a.rest.text.empty() ? TaskLine{a.line, 1, ""} : a.rest,
              "'" + a.kind + "' takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
  }

  Step prepare(const TaskAction &a, const std::string &label) {
    auto w = words(a.rest);
    const FormalGroupLaw &f = *law;
    const std::string &k = a.kind;
    if (k == "law") {
      arity(a, w, 0);
      return [&f, label](Report &r) { r.result(label, f.series()); };
    }
    if (k == "coefficient") {
      arity(a, w, 2);
      int i = to_int(w[0]), j = to_int(w[1]);
      return [&f, label, i, j](Report &r) { r.result(label, f.coefficient(i, j)); };
    }
    if (k == "inverse") {
      arity(a, w, 0);
      return [&f, label](Report &r) { r.result(label, f.inverse()); };
    }
    if (k == "nseries") {
      arity(a, w, 1);
      int n = to_int(w[0]);
      return [&f, label, n](Report &r) { r.result(label, f.nseries(n)); };
    }
    if (k == "log") {
      arity(a, w, 0);
      return [&f, label](Report &r) { r.result(label, f.log()); };
    }
    if (k == "check-axioms") {
      arity(a, w, 0);
      return [&f, label](Report &r) {
        for (const auto &ax : check_axioms(f)) {
          if (!ax.applicable) {
            r.result(label + " " + ax.axiom, "not applicable");
            continue;
          }
          r.add(label + " " + ax.axiom, "holds", ax.pass ? "holds" : "fails at " + ax.first_failure,
                ax.pass);
        }
      };
    }
    if (k == "eval") {
      Series s = parse_at(a.rest, ctx, &f);
      return [label, s](Report &r) { r.result(label, s); };
    }
    if (k == "equal") {
      auto eq = a.rest.text.find('=');
      if (eq == std::string::npos) fail_at(a.rest, "expected 'EXPR = EXPR'");
      Series lhs = parse_at(trimmed({a.line, a.rest.column, a.rest.text.substr(0, eq)}), ctx, &f);
      Series rhs = parse_at(
          trimmed({a.line, a.rest.column + eq + 1, a.rest.text.substr(eq + 1)}), ctx, &f);
      return [label, lhs, rhs](Report &r) {
        r.add(label, rhs.to_string(), lhs.to_string(), lhs == rhs);
      };
    }
    if (k == "specialize") {
      auto [target, expr] = head(a.rest);
      if (f.kind() != LawKind::universal) fail_at(target, "specialize needs the universal law");
      LawKind kind;
      if (target.text == "additive")
        kind = LawKind::additive;
      else if (target.text == "multiplicative")
        kind = LawKind::multiplicative;
      else
        fail_at(target, "target must be additive or multiplicative");
      Series s = parse_at(expr, ctx, &f);
      return [label, s, kind](Report &r) {
        r.result(label, specialize(SpecializationMap::to(kind), s));
      };
    }
    if (k == "chern") {
      arity(a, w, 2);
      const auto &b = bundle(w[0]);
      int i = to_int(w[1]);
      return [&b, label, i](Report &r) { r.result(label, chern(i, b)); };
    }
    if (k == "total-chern" || k == "euler" || k == "ch_a" || k == "ch_m" || k == "todd") {
      arity(a, w, 1);
      const auto &b = bundle(w[0]);
      std::function<Series(const SplitBundle &)> fn;
      if (k == "total-chern") fn = total_chern;
      if (k == "euler") fn = euler;
      if (k == "ch_a") fn = ch_a;
      if (k == "ch_m") fn = ch_m;
      if (k == "todd") fn = todd;
      return [&b, label, fn](Report &r) { r.result(label, fn(b)); };
    }
    if (k == "relation") {
      arity(a, w, 1);
      auto p = ring(w[0]);
      return [p, label](Report &r) { r.result(label, p->relation_series()); };
    }
    if (k == "reduce" || k == "pushforward") {
      auto [name, expr] = head(a.rest);
      if (name.text.empty()) fail_at(TaskLine{a.line, 1, ""}, "'" + k + "' needs a bundle");
      auto p = ring(name);
      Series e = parse_at(expr, p->total(), &p->law());
      bool push = k == "pushforward";
      return [p, label, e, push](Report &r) {
        r.result(label, push ? p->pushforward(e) : p->reduce(e));
      };
    }
    if (k == "whitney") {
      arity(a, w, 2);
      const auto &b1 = bundle(w[0]);
      const auto &b2 = bundle(w[1]);
      return [&b1, &b2, label](Report &r) {
        Series lhs = total_chern(direct_sum(b1, b2));
        Series rhs = total_chern(b1) * total_chern(b2);
        r.add(label, rhs.to_string(), lhs.to_string(), lhs == rhs);
      };
    }
    if (k == "tower") {
      arity(a, w, 1);
      int depth = to_int(w[0]);
      if (depth < 0) fail_at(w[0], "depth must be non-negative");
      return [&f, label, depth](Report &r) {
        auto cls = tower_classes(f, depth);
        for (std::size_t i = 0; i < cls.size(); ++i)
          r.result(label + " [P" + std::to_string(i) + "]", cls[i]);
      };
    }
    if (k == "fglcheck") {
      arity(a, w, 0);
      int n = task.truncation;
      return [&f, label, n](Report &r) {
        auto c = geometric_fgl_check(f, n);
        r.add(label, c.rhs.to_string(), c.lhs.to_string(), c.pass);
      };
    }
    if (k == "grr" || k == "chi") {
      arity(a, w, 2);
      int rank = to_int(w[0]), kk = to_int(w[1]);
      if (rank < (k == "grr" ? 2 : 1)) fail_at(w[0], "rank too small");
      bool grr = k == "grr";
      return [label, rank, kk, grr](Report &r) {
        Rational want = k_chi_oracle(rank, kk);
        if (grr) {
          auto g = grr_check(rank, kk);
          r.add(label + " lhs", to_string(want), to_string(g.lhs));
          r.add(label + " rhs", to_string(want), to_string(g.rhs));
        } else {
          r.add(label, to_string(want), to_string(k_pushforward(rank, kk)));
        }
      };
    }
    if (k == "cf") {
      arity(a, w, 0);
      int n = task.truncation;
      return [label, n](Report &r) {
        Report sub = conner_floyd_check(n);
        sub.name = label;
        r.append(sub);
      };
    }
    fail_at(TaskLine{a.line, 1, ""}, "unknown action '" + k + "'");
  }
};

}  // namespace

Report run_task(const Task &task, std::string name) {
  Runner runner(task);
  std::vector<Step> steps;
  for (std::size_t i = 0; i < task.actions.size(); ++i) {
    const auto &a = task.actions[i];
    std::string label = "action " + std::to_string(i + 1) + " " + a.kind;
    if (!a.rest.text.empty()) label += " " + a.rest.text;
    steps.push_back(runner.prepare(a, label));
  }
  Report rep{std::move(name), {}};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      steps[i](rep);
    } catch (const Error &e) {
      throw Error(e.code(), "action " + std::to_string(i + 1) + " (line " +
                                std::to_string(task.actions[i].line) + "): " + e.detail());
    }
  }
  return rep;
}

}  // namespace occ
