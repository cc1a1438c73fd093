#pragma once

// ASCII and SVG diagrams. Both emitters share one layout: elements are
// grouped by schedule stage, and elements of a stage whose vertical spans
// overlap are spread over adjacent columns.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cen/core.hpp"
#include "cen/engine.hpp"

namespace cen::render {

class RenderError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int max_order = 16;

struct Layout {
  std::vector<std::size_t> stage_of;  // per element
  std::vector<std::size_t> column_of; // per element
  std::size_t columns = 0;
};

Layout layout(const Network& network);

struct AsciiOptions {
  std::size_t max_width = 240;
};

std::string render_ascii(const Network& network, const engine::StatsReport* stats = nullptr,
                         const AsciiOptions& options = {});

std::string render_svg(const Network& network, const engine::StatsReport* stats = nullptr);

} // namespace cen::render
