#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "occ/report.hpp"

namespace occ {

/// fgl-axioms, whitney, pbf, cf, grr, fgl-theorem.
std::vector<std::string> suite_names();

/// Runs a named suite. `truncation` overrides the suite's default; grr
/// ignores it. Randomized items use fixed seeds.
Report run_suite(std::string_view name, std::optional<int> truncation = std::nullopt);

}  // namespace occ
