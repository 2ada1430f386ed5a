#include "occ/error.hpp"

namespace occ {

const char *errc_message(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::incompatible_contexts: return "incompatible contexts";
    case Errc::non_nilpotent_substitution: return "non-nilpotent substitution";
    case Errc::not_a_unit: return "not a unit";
    case Errc::not_divisible: return "not divisible";
    case Errc::not_symmetric: return "not symmetric";
    case Errc::reduction_failed: return "reduction failed";
    case Errc::requires_rational: return "requires rational coefficients";
    case Errc::variable_collision: return "variable collision";
    case Errc::pushforward_not_polynomial: return "pushforward not polynomial";
    case Errc::finiteness_violated: return "finiteness violated";
    case Errc::law_mismatch: return "law mismatch";
    case Errc::out_of_range: return "out of range";
    case Errc::parse_error: return "parse error";
  }
  return "unknown error";
}

static std::string compose(Errc code, const std::string &detail) {
  std::string msg = errc_message(code);
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

Error::Error(Errc code, const std::string &detail)
    : std::runtime_error(compose(code, detail)), code_(code), detail_(detail) {}

Error::Error(Errc code, const std::string &detail, std::size_t position)
    : std::runtime_error(compose(code, detail)),
      code_(code),
      detail_(detail),
      position_(position) {}

}  // namespace occ
