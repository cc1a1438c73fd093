#include "cen/render.hpp"

#include <algorithm>

namespace cen::render {
namespace {

void check_inputs(const Network& network, const engine::StatsReport* stats) {
  require_valid(network);
  if (network.order() > max_order)
    throw ContractViolation("rendering supports at most " + std::to_string(max_order) + " wires");
  if (stats && (stats->order != network.order() || stats->elements != network.size()))
    throw ContractViolation("statistics describe a different network (" + std::to_string(stats->elements) +
                            " elements, order " + std::to_string(stats->order) + ")");
}

bool is_joint(const Element& e, int w) {
  // Interior wires of a fused element are shared by two of its CEs.
  if (e.is_link())
    return false;
  const auto ws = e.wires();
  return std::find(ws.begin() + 1, ws.end() - 1, w) != ws.end() - 1;
}

std::string slot_label(const engine::StatsReport* stats, std::size_t element, std::size_t slot) {
  if (!stats)
    return {};
  const auto& probs = stats->element_stats[element].slot_probs;
  return slot < probs.size() ? format_probability(probs[slot]) : std::string{};
}

std::size_t widest_label(const Network& network, const engine::StatsReport* stats) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < network.size(); ++i)
    for (std::size_t s = 0; s < network[i].slot_count(); ++s)
      w = std::max(w, slot_label(stats, i, s).size());
  return w;
}

std::string header_left(const Network& network, const engine::StatsReport* stats) {
  std::string s = std::to_string(network.link_count());
  if (stats)
    s += '/' + std::to_string(stats->max_swaps) + ' ' + format_decimal(stats->avg_swaps, 3);
  return s;
}

bool settled(const engine::StatsReport* stats, int w) {
  return stats && std::find(stats->settled.begin(), stats->settled.end(), w) != stats->settled.end();
}

} // namespace

Layout layout(const Network& network) {
  const Schedule sched = schedule(network);
  Layout out;
  out.stage_of = sched.stage_of;
  out.column_of.assign(network.size(), 0);
  for (const auto& stage : sched.stages) {
    // Lanes hold the spans already placed; first fit by element order.
    std::vector<std::vector<std::pair<int, int>>> lanes;
    for (std::size_t idx : stage) {
      const int lo = network[idx].lowest();
      const int hi = network[idx].highest();
      std::size_t lane = 0;
      for (; lane < lanes.size(); ++lane) {
        const bool clash = std::any_of(lanes[lane].begin(), lanes[lane].end(),
                                       [&](const auto& span) { return lo <= span.second && span.first <= hi; });
        if (!clash)
          break;
      }
      if (lane == lanes.size())
        lanes.emplace_back();
      lanes[lane].emplace_back(lo, hi);
      out.column_of[idx] = out.columns + lane;
    }
    out.columns += lanes.size();
  }
  return out;
}

std::string render_ascii(const Network& network, const engine::StatsReport* stats, const AsciiOptions& options) {
  check_inputs(network, stats);
  const Layout lay = layout(network);
  const std::size_t cell = std::max<std::size_t>(3, widest_label(network, stats) + 1);
  const std::size_t width = 3 + lay.columns * cell;
  const auto x_of = [&](std::size_t element) { return 2 + lay.column_of[element] * cell; };

  const std::string left = header_left(network, stats);
  const std::string right = stats ? std::to_string(stats->disorder) : std::string{};
  const std::size_t total = std::max(width + (stats ? 2 : 0), left.size() + 1 + right.size());
  if (total > options.max_width)
    throw RenderError("diagram needs " + std::to_string(total) + " columns, limit is " +
                      std::to_string(options.max_width));

  std::string out = left;
  if (!right.empty())
    out += std::string(total - left.size() - right.size(), ' ') + right;
  out += '\n';

  const int order = network.order();
  for (int w = 1; w <= order; ++w) {
    std::string row(width, '-');
    row.front() = '>';
    row.back() = '>';
    for (std::size_t i = 0; i < network.size(); ++i) {
      const Element& e = network[i];
      if (w < e.lowest() || w > e.highest())
        continue;
      row[x_of(i)] = e.touches(w) ? (is_joint(e, w) ? 'o' : '+') : '|';
    }
    if (settled(stats, w))
      row += " x";
    out += row + '\n';

    if (w == order)
      break;
    std::string gap(width, ' ');
    for (std::size_t i = 0; i < network.size(); ++i)
      if (network[i].lowest() <= w && network[i].highest() > w)
        gap[x_of(i)] = '|';
    while (!gap.empty() && gap.back() == ' ')
      gap.pop_back();
    out += gap + '\n';
  }

  if (stats) {
    for (std::size_t slot = 0; slot < 3; ++slot) {
      std::string row(width, ' ');
      bool any = false;
      for (std::size_t i = 0; i < network.size(); ++i) {
        const std::string label = slot_label(stats, i, slot);
        if (label.empty())
          continue;
        row.replace(x_of(i), label.size(), label);
        any = true;
      }
      if (!any)
        break;
      while (!row.empty() && row.back() == ' ')
        row.pop_back();
      out += row + '\n';
    }
  }
  return out;
}

std::string render_svg(const Network& network, const engine::StatsReport* stats) {
  check_inputs(network, stats);
  const Layout lay = layout(network);

  constexpr int margin = 20;
  constexpr int header = 20;
  constexpr int spacing_y = 30;
  constexpr int char_w = 6;
  const int spacing_x = std::max(24, 12 + char_w * static_cast<int>(widest_label(network, stats)));
  const int order = network.order();

  const int wire_x0 = margin;
  const int wire_x1 = margin + spacing_x * (static_cast<int>(lay.columns) + 1);
  const auto y_of = [&](int w) { return margin + header + (w - 1) * spacing_y; };
  const auto x_of = [&](std::size_t element) {
    return wire_x0 + spacing_x * (static_cast<int>(lay.column_of[element]) + 1);
  };
  const int width = wire_x1 + margin + (stats ? 2 * char_w : 0);
  const int height = y_of(order) + margin + (stats ? 12 : 0);

  const auto num = [](int v) { return std::to_string(v); };
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + ' ' + num(height) + "\">\n";

  const auto text = [&](const char* cls, int x, int y, const std::string& body, const char* anchor) {
    out += "<text class=\"" + std::string(cls) + "\" x=\"" + num(x) + "\" y=\"" + num(y) +
           "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"" + anchor + "\">" + body + "</text>\n";
  };

  text("header", wire_x0, margin, header_left(network, stats), "start");
  if (stats)
    text("disorder", wire_x1, margin, std::to_string(stats->disorder), "end");

  for (int w = 1; w <= order; ++w) {
    out += "<line class=\"wire\" x1=\"" + num(wire_x0) + "\" y1=\"" + num(y_of(w)) + "\" x2=\"" + num(wire_x1) +
           "\" y2=\"" + num(y_of(w)) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (settled(stats, w))
      text("settled", wire_x1 + char_w, y_of(w) + 4, "x", "start");
  }

  for (std::size_t i = 0; i < network.size(); ++i) {
    const Element& e = network[i];
    const int x = x_of(i);
    out += "<line class=\"" + std::string(e.is_link() ? "link" : "fused") + "\" x1=\"" + num(x) + "\" y1=\"" +
           num(y_of(e.lowest())) + "\" x2=\"" + num(x) + "\" y2=\"" + num(y_of(e.highest())) +
           "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (int w : e.wires()) {
      if (is_joint(e, w))
        out += "<circle class=\"joint\" cx=\"" + num(x) + "\" cy=\"" + num(y_of(w)) +
               "\" r=\"4\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
      else
        out += "<circle class=\"endpoint\" cx=\"" + num(x) + "\" cy=\"" + num(y_of(w)) + "\" r=\"3\" fill=\"black\"/>\n";
    }
    for (std::size_t s = 0; s < e.slot_count(); ++s) {
      const std::string label = slot_label(stats, i, s);
      if (label.empty())
        continue;
      const auto [a, b] = e.slot(s);
      text("label", x + 4, (y_of(a) + y_of(b)) / 2 + 4, label, "start");
    }
  }
  out += "</svg>\n";
  return out;
}

} // namespace cen::render
