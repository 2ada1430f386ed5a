#pragma once

#include <string_view>

#include "occ/fgl.hpp"

namespace occ {

/// Parses an arithmetic expression over the variables of `context`:
/// + - * ^, integers, division by constants, parentheses, and, when a law
/// is given, F(a, b) and inv(a). Errors carry the character position.
Series parse_expression(std::string_view text, const ContextPtr &context,
                        const FormalGroupLaw *law = nullptr);

}  // namespace occ
