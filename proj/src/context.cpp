#include "occ/context.hpp"

#include <algorithm>

#include "occ/error.hpp"

namespace occ {

bool valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!alpha(name[0])) return false;
  return std::all_of(name.begin(), name.end(), [&](char c) {
    return alpha(c) || (c >= '0' && c <= '9');
  });
}

Context::Context(std::vector<Variable> variables, int truncation,
                 CoefficientMode mode)
    : variables_(std::move(variables)), truncation_(truncation), mode_(mode) {
  if (truncation_ < 1)
    throw Error(Errc::invalid_argument, "truncation must be >= 1");
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const auto &v = variables_[i];
    if (!valid_identifier(v.name))
      throw Error(Errc::invalid_argument, "bad variable name '" + v.name + "'");
    if (v.nilpotent && v.degree < 1)
      throw Error(Errc::invalid_argument,
                  "nilpotent variable '" + v.name + "' needs degree >= 1");
    if (!index_.emplace(v.name, i).second)
      throw Error(Errc::invalid_argument, "duplicate variable '" + v.name + "'");
  }
}

ContextPtr Context::make(std::vector<Variable> variables, int truncation,
                         CoefficientMode mode) {
  return ContextPtr(new Context(std::move(variables), truncation, mode));
}

std::optional<std::size_t> Context::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Context::require(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx)
    throw Error(Errc::invalid_argument,
                "unknown variable '" + std::string(name) + "'");
  return *idx;
}

ContextPtr Context::with_truncation(int truncation) const {
  return make(variables_, truncation, mode_);
}

ContextPtr Context::with_mode(CoefficientMode mode) const {
  return make(variables_, truncation_, mode);
}

ContextPtr Context::extended(const std::vector<Variable> &extra) const {
  auto vars = variables_;
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make(std::move(vars), truncation_, mode_);
}

ContextPtr Context::merged(const std::vector<Variable> &extra) const {
  auto vars = variables_;
  for (const auto &v : extra)
    if (!contains(v.name)) vars.push_back(v);
  return make(std::move(vars), truncation_, mode_);
}

ContextPtr Context::without(const std::vector<std::string> &names) const {
  std::vector<Variable> vars;
  for (const auto &v : variables_)
    if (std::find(names.begin(), names.end(), v.name) == names.end())
      vars.push_back(v);
  return make(std::move(vars), truncation_, mode_);
}

bool Context::operator==(const Context &other) const {
  return truncation_ == other.truncation_ && mode_ == other.mode_ &&
         variables_ == other.variables_;
}

std::string Context::describe() const {
  std::string out = "{";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) out += ", ";
    out += variables_[i].name;
  }
  out += "; N=" + std::to_string(truncation_) + "}";
  return out;
}

bool same_context(const ContextPtr &a, const ContextPtr &b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace occ
