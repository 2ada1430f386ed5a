#pragma once

#include <optional>
#include <string>
#include <vector>

#include "occ/series.hpp"

namespace occ {

/// {"terms": [{"monomial": {var: exp, ...}, "coeff": "p/q"}, ...]} in
/// canonical term order, variables in context order.
std::string series_to_json(const Series &s);
/// Inverse of series_to_json; variables must belong to the context.
Series series_from_json(std::string_view text, const ContextPtr &context);

struct ReportItem {
  std::string item;
  std::string expected;  // empty for plain results
  std::string actual;
  bool pass = false;
  bool check = true;
  std::optional<Series> value;  // emitted structurally in JSON
};

struct Report {
  std::string name;
  std::vector<ReportItem> items;

  bool pass() const;
  /// Check comparing canonical strings.
  void add(std::string item, std::string expected, std::string actual);
  void add(std::string item, std::string expected, std::string actual, bool pass);
  /// Plain result, always passing.
  void result(std::string item, const Series &value);
  void result(std::string item, std::string value);
  void append(const Report &other);
};

/// Checks as "PASS item: actual" / "FAIL item: expected X, got Y"; plain
/// results as "item: value"; then a summary line.
std::string to_text(const Report &report);
/// {"name", "pass", "items": [{item, expected, actual, pass}]}
std::string to_json(const Report &report);

}  // namespace occ
