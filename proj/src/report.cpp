#include "cen/report.hpp"

#include <sstream>

namespace cen::report {

nlohmann::ordered_json to_json(const engine::StatsReport& r) {
  nlohmann::ordered_json j;
  j["order"] = r.order;
  j["links"] = r.links;
  auto probs = nlohmann::ordered_json::array();
  for (const auto& p : r.slot_probs())
    probs.push_back(to_string(p));
  j["element_probs"] = probs;
  j["avg_swaps"] = to_string(r.avg_swaps);
  j["max_swaps"] = r.max_swaps;
  j["worst_inputs"] = r.worst_inputs;
  j["avg_comparisons"] = to_string(r.avg_comparisons);
  j["max_comparisons"] = r.max_comparisons;
  auto hist = nlohmann::ordered_json::object();
  for (const auto& [k, c] : r.histogram)
    hist[std::to_string(k)] = c;
  j["histogram"] = hist;
  j["settled"] = r.settled;
  j["disorder"] = r.disorder;
  j["stages"] = r.stage_count;
  j["weighted_cost"] = to_string(r.weighted_cost);
  return j;
}

std::string to_text(const engine::StatsReport& r) {
  std::ostringstream os;
  os << "order " << r.order << ", " << r.elements << " elements, " << r.links << " links, " << r.stage_count
     << " stages\n";
  os << "swaps: avg " << format_fraction(r.avg_swaps) << " (" << format_decimal(r.avg_swaps) << "), max "
     << r.max_swaps << " on " << r.worst_input_count << " of " << r.input_count << " inputs\n";
  os << "comparisons: avg " << format_fraction(r.avg_comparisons) << " (" << format_decimal(r.avg_comparisons)
     << "), max " << r.max_comparisons << "\n";
  os << "weighted cost (weight " << format_fraction(r.cost_weight) << "): " << format_fraction(r.weighted_cost)
     << "\n";
  os << "settled:";
  for (int w : r.settled)
    os << ' ' << w;
  os << "  disorder " << r.disorder << " (" << format_fraction(r.disorder_fraction) << ")\n";
  os << "element swap probabilities:\n";
  for (std::size_t i = 0; i < r.element_stats.size(); ++i) {
    const auto& e = r.element_stats[i];
    os << "  " << (i + 1);
    for (const auto& p : e.slot_probs)
      os << ' ' << format_fraction(p);
    if (e.slot_probs.size() > 1)
      os << "  (active " << format_fraction(e.activation) << ")";
    os << '\n';
  }
  os << "histogram:";
  for (const auto& [k, c] : r.histogram)
    os << ' ' << k << ':' << c;
  os << '\n';
  return os.str();
}

} // namespace cen::report
