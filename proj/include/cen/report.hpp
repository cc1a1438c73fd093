#pragma once

#include <string>

#include <json.hpp>

#include "cen/engine.hpp"

namespace cen::report {

/// StatsReport as JSON with the fixed field set
/// {order, links, element_probs, avg_swaps, max_swaps, worst_inputs,
///  avg_comparisons, max_comparisons, histogram, settled, disorder, stages,
///  weighted_cost}. Rationals are "num/den" strings.
nlohmann::ordered_json to_json(const engine::StatsReport& r);

/// Human-readable multi-line summary.
std::string to_text(const engine::StatsReport& r);

} // namespace cen::report
