#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace occ {

enum class CoefficientMode { integers, rationals };

struct Variable {
  std::string name;
  int degree = 1;
  // Nilpotent variables count towards the truncation weight. Coefficient
  // generators (negative degree) are never truncated.
  bool nilpotent = true;

  bool operator==(const Variable &) const = default;
};

class Context;
using ContextPtr = std::shared_ptr<const Context>;

/// Ordered variable declarations plus the truncation bound N and the
/// coefficient mode. Immutable; shared between series.
class Context {
 public:
  static ContextPtr make(std::vector<Variable> variables, int truncation,
                         CoefficientMode mode = CoefficientMode::rationals);

  const std::vector<Variable> &variables() const { return variables_; }
  std::size_t size() const { return variables_.size(); }
  int truncation() const { return truncation_; }
  CoefficientMode mode() const { return mode_; }
  bool rational() const { return mode_ == CoefficientMode::rationals; }

  const Variable &variable(std::size_t i) const { return variables_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  ContextPtr with_truncation(int truncation) const;
  ContextPtr with_mode(CoefficientMode mode) const;
  /// Appends variables; duplicates of existing names are an error.
  ContextPtr extended(const std::vector<Variable> &extra) const;
  /// Appends only the variables whose names are not already present.
  ContextPtr merged(const std::vector<Variable> &extra) const;
  ContextPtr without(const std::vector<std::string> &names) const;

  bool operator==(const Context &other) const;

  std::string describe() const;

 private:
  Context(std::vector<Variable> variables, int truncation, CoefficientMode mode);

  std::vector<Variable> variables_;
  std::unordered_map<std::string, std::size_t> index_;
  int truncation_;
  CoefficientMode mode_;
};

/// Same object or structurally equal.
bool same_context(const ContextPtr &a, const ContextPtr &b);

bool valid_identifier(std::string_view name);

}  // namespace occ
