#include "cen/core.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

namespace cen {

Element Element::link(int i, int j) { return Element(ElementKind::link, {i, j, 0, 0}); }

Element Element::fused2(int a, int b, int c) { return Element(ElementKind::fused2, {a, b, c, 0}); }

Element Element::fused3(int a, int b, int c, int d) {
  return Element(ElementKind::fused3, {a, b, c, d});
}

Element Element::from_wires(std::span<const int> wires) {
  switch (wires.size()) {
  case 2: return link(wires[0], wires[1]);
  case 3: return fused2(wires[0], wires[1], wires[2]);
  case 4: return fused3(wires[0], wires[1], wires[2], wires[3]);
  default:
    throw ContractViolation("an element needs 2, 3 or 4 wires, got " + std::to_string(wires.size()));
  }
}

int Element::lowest() const noexcept {
  const auto w = wires();
  return *std::min_element(w.begin(), w.end());
}

int Element::highest() const noexcept {
  const auto w = wires();
  return *std::max_element(w.begin(), w.end());
}

bool Element::touches(int w) const noexcept {
  const auto ws = wires();
  return std::find(ws.begin(), ws.end(), w) != ws.end();
}

bool Element::shares_wire(const Element& other) const noexcept { return shared_wire_count(other) > 0; }

std::size_t Element::shared_wire_count(const Element& other) const noexcept {
  std::size_t n = 0;
  for (int w : wires())
    n += other.touches(w);
  return n;
}

Element Element::normalized() const {
  auto w = wires_;
  std::sort(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(arity()));
  return Element(kind_, w);
}

bool Element::is_normalized() const noexcept {
  const auto w = wires();
  return std::adjacent_find(w.begin(), w.end(), std::greater_equal<>()) == w.end();
}

std::string to_string(const Element& e) {
  std::string s = "(";
  bool first = true;
  for (int w : e.wires()) {
    if (!first)
      s += ',';
    s += std::to_string(w);
    first = false;
  }
  return s + ')';
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << to_string(e); }

Network::Network(int order, std::vector<Element> elements, std::string name)
    : order_(order), elements_(std::move(elements)), name_(std::move(name)) {}

std::size_t Network::link_count() const noexcept {
  std::size_t n = 0;
  for (const auto& e : elements_)
    n += e.slot_count();
  return n;
}

bool Network::has_fused() const noexcept {
  return std::any_of(elements_.begin(), elements_.end(), [](const Element& e) { return !e.is_link(); });
}

Network Network::with_elements(std::vector<Element> elements) const {
  return Network(order_, std::move(elements), name_);
}

Network Network::renamed(std::string name) const { return Network(order_, elements_, std::move(name)); }

std::ostream& operator<<(std::ostream& os, const Network& n) {
  os << "N=" << n.order() << " [";
  for (std::size_t i = 0; i < n.size(); ++i)
    os << (i ? " " : "") << n[i];
  return os << ']';
}

std::vector<Violation> validate(const Network& network) {
  std::vector<Violation> out;
  constexpr auto whole = std::numeric_limits<std::size_t>::max();
  if (network.order() < 1)
    out.push_back({whole, ViolationKind::invalid_order, network.order(),
                   "order " + std::to_string(network.order()) + " is below 1"});

  for (std::size_t idx = 0; idx < network.size(); ++idx) {
    const Element& e = network[idx];
    const std::string where = "element " + std::to_string(idx + 1) + " " + to_string(e) + ": ";
    const auto ws = e.wires();
    for (int w : ws)
      if (w < 1 || w > network.order())
        out.push_back({idx, ViolationKind::endpoint_out_of_range, w,
                       where + "endpoint " + std::to_string(w) + " outside 1.." +
                           std::to_string(network.order())});
    bool duplicate = false;
    for (std::size_t a = 0; a < ws.size(); ++a)
      for (std::size_t b = a + 1; b < ws.size(); ++b)
        if (ws[a] == ws[b] && !duplicate) {
          duplicate = true;
          out.push_back({idx, ViolationKind::duplicate_endpoint, ws[a],
                         where + "endpoint " + std::to_string(ws[a]) + " repeated"});
        }
    if (!duplicate && !e.is_normalized())
      out.push_back({idx, ViolationKind::endpoints_not_increasing, 0, where + "endpoints not increasing"});
  }
  return out;
}

void require_valid(const Network& network) {
  const auto v = validate(network);
  if (!v.empty())
    throw ContractViolation("invalid network: " + v.front().message);
}

EvalTrace run(const Network& network, std::span<const int> input) {
  if (input.size() != static_cast<std::size_t>(network.order()))
    throw ContractViolation("input has " + std::to_string(input.size()) + " values but the network order is " +
                            std::to_string(network.order()));
  EvalTrace trace;
  trace.output.assign(input.begin(), input.end());
  trace.per_element.reserve(network.size());
  const std::span<int> state(trace.output);
  for (const auto& e : network.elements()) {
    const auto outcome = apply_element(e, state);
    trace.total_swaps += outcome.swaps;
    trace.total_comparisons += outcome.comparisons;
    trace.per_element.push_back(outcome);
  }
  return trace;
}

Element mirror(const Element& e, int order) {
  std::array<int, 4> w{};
  const auto ws = e.wires();
  for (std::size_t k = 0; k < ws.size(); ++k)
    w[k] = order + 1 - ws[ws.size() - 1 - k];
  return Element::from_wires(std::span<const int>(w.data(), ws.size())).normalized();
}

Network decompose(const Network& network) {
  std::vector<Element> out;
  out.reserve(network.link_count());
  for (const auto& e : network.elements()) {
    switch (e.kind()) {
    case ElementKind::link:
      out.push_back(e);
      break;
    case ElementKind::fused2:
      out.push_back(Element::link(e.wire(0), e.wire(1)));
      out.push_back(Element::link(e.wire(1), e.wire(2)));
      break;
    case ElementKind::fused3:
      out.push_back(Element::link(e.wire(1), e.wire(2)));
      out.push_back(Element::link(e.wire(0), e.wire(1)));
      out.push_back(Element::link(e.wire(2), e.wire(3)));
      break;
    }
  }
  return network.with_elements(std::move(out));
}

Schedule schedule(const Network& network) {
  require_valid(network);
  Schedule s;
  s.stage_of.resize(network.size());
  // Stage after which each wire becomes free (0 = never used).
  std::vector<std::size_t> ready(static_cast<std::size_t>(network.order()) + 1, 0);
  for (std::size_t idx = 0; idx < network.size(); ++idx) {
    const Element& e = network[idx];
    std::size_t stage = 0;
    for (int w : e.wires())
      stage = std::max(stage, ready[static_cast<std::size_t>(w)]);
    for (int w : e.wires())
      ready[static_cast<std::size_t>(w)] = stage + 1;
    s.stage_of[idx] = stage;
    if (s.stages.size() <= stage)
      s.stages.resize(stage + 1);
    s.stages[stage].push_back(idx);
  }
  return s;
}

} // namespace cen
