#include "occ/report.hpp"

#include <algorithm>

#include "json.hpp"
#include "occ/error.hpp"

namespace occ {

using ojson = nlohmann::ordered_json;

namespace {

ojson series_json(const Series &s) {
  const auto &ctx = s.context();
  ojson terms = ojson::array();
  for (const auto &t : s.terms()) {
    ojson mono = ojson::object();
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (t.exponents[i]) mono[ctx->variable(i).name] = t.exponents[i];
    terms.push_back({{"monomial", mono}, {"coeff", to_string(t.coeff)}});
  }
  return {{"terms", terms}};
}

}  // namespace

std::string series_to_json(const Series &s) { return series_json(s).dump(); }

Series series_from_json(std::string_view text, const ContextPtr &context) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(Errc::parse_error, e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw Error(Errc::parse_error, "expected an object with a \"terms\" array");
  std::vector<Term> terms;
  for (const auto &t : j["terms"]) {
    if (!t.is_object() || !t.contains("monomial") || !t.contains("coeff") ||
        !t["monomial"].is_object() || !t["coeff"].is_string())
      throw Error(Errc::parse_error, "term needs \"monomial\" object and \"coeff\" string");
    Exponents e(context->size(), 0);
    for (const auto &[name, exp] : t["monomial"].items()) {
      auto idx = context->index_of(name);
      if (!idx) throw Error(Errc::parse_error, "unknown variable '" + name + "'");
      if (!exp.is_number_unsigned() || exp.get<unsigned>() > 255)
        throw Error(Errc::parse_error, "bad exponent for '" + name + "'");
      e[*idx] = static_cast<std::uint8_t>(exp.get<unsigned>());
    }
    terms.push_back({std::move(e), parse_rational(t["coeff"].get<std::string>()), 0});
  }
  return Series::from_terms(context, std::move(terms));
}

bool Report::pass() const {
  return std::all_of(items.begin(), items.end(), [](const ReportItem &i) { return i.pass; });
}

void Report::add(std::string item, std::string expected, std::string actual) {
  bool ok = expected == actual;
  add(std::move(item), std::move(expected), std::move(actual), ok);
}

void Report::add(std::string item, std::string expected, std::string actual, bool pass) {
  ReportItem r;
  r.item = std::move(item);
  r.expected = std::move(expected);
  r.actual = std::move(actual);
  r.pass = pass;
  items.push_back(std::move(r));
}

void Report::result(std::string item, const Series &value) {
  ReportItem r;
  r.item = std::move(item);
  r.actual = value.to_string();
  r.pass = true;
  r.check = false;
  r.value = value;
  items.push_back(std::move(r));
}

void Report::result(std::string item, std::string value) {
  ReportItem r;
  r.item = std::move(item);
  r.actual = std::move(value);
  r.pass = true;
  r.check = false;
  items.push_back(std::move(r));
}

void Report::append(const Report &other) {
  for (auto i : other.items) {
    if (!other.name.empty()) i.item = other.name + ": " + i.item;
    items.push_back(std::move(i));
  }
}

std::string to_text(const Report &report) {
  std::string out;
  for (const auto &i : report.items) {
    if (!i.check)
      out += i.item + ": " + i.actual + "\n";
    else if (i.pass)
      out += "PASS " + i.item + ": " + i.actual + "\n";
    else
      out += "FAIL " + i.item + ": expected " + i.expected + ", got " + i.actual + "\n";
  }
  out += report.pass() ? "PASS " : "FAIL ";
  out += report.name + " (" + std::to_string(report.items.size()) + " items)\n";
  return out;
}

std::string to_json(const Report &report) {
  ojson items = ojson::array();
  for (const auto &i : report.items) {
    ojson actual = i.value ? series_json(*i.value) : ojson(i.actual);
    ojson expected = i.check ? ojson(i.expected) : ojson(nullptr);
    items.push_back({{"item", i.item}, {"expected", expected}, {"actual", actual},
                     {"pass", i.pass}});
  }
  ojson j = {{"name", report.name}, {"pass", report.pass()}, {"items", items}};
  return j.dump(2) + "\n";
}

}  // namespace occ
