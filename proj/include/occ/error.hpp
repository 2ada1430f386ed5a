#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace occ {

enum class Errc {
  invalid_argument,
  incompatible_contexts,
  non_nilpotent_substitution,
  not_a_unit,
  not_divisible,
  not_symmetric,
  reduction_failed,
  requires_rational,
  variable_collision,
  pushforward_not_polynomial,
  finiteness_violated,
  law_mismatch,
  out_of_range,
  parse_error,
};

/// Canonical short message for an error code, e.g. "not a unit".
const char *errc_message(Errc code);

class Error : public std::runtime_error {
 public:
  explicit Error(Errc code, const std::string &detail = {});
  /// Parse errors remember the offset into the parsed text.
  Error(Errc code, const std::string &detail, std::size_t position);

  Errc code() const noexcept { return code_; }
  const std::string &detail() const noexcept { return detail_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  Errc code_;
  std::string detail_;
  std::optional<std::size_t> position_;
};

}  // namespace occ
