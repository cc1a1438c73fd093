#include "cen/transforms.hpp"

#include <deque>
#include <set>
#include <stdexcept>
#include <tuple>

namespace cen::transforms {
namespace {

constexpr int search_order_cap = 8;

void require_links_only(const Network& network, const char* op) {
  for (std::size_t k = 0; k < network.size(); ++k)
    if (!network[k].is_link())
      throw TransformError(TransformFailure::fused_elements_present,
                           std::string(op) + " needs an all-link network; element " + std::to_string(k + 1) + " " +
                               to_string(network[k]) + " is fused (decompose first)");
}

int transpose(int w, int i, int j) { return w == i ? j : (w == j ? i : w); }

// Index of the first prefix element that relabeling would reverse, or size().
std::size_t first_reversed(const Network& network, std::size_t target) {
  const auto [i, j] = network[target].slot(0);
  for (std::size_t k = 0; k < target; ++k) {
    const Element& e = network[k];
    if (transpose(e.wire(0), i, j) > transpose(e.wire(1), i, j))
      return k;
  }
  return network.size();
}

std::vector<Rational> link_probs(const engine::StatsReport& r) {
  std::vector<Rational> out;
  for (const auto& e : r.element_stats)
    out.push_back(e.activation);
  return out;
}

std::vector<int> key_of(const Network& n) {
  std::vector<int> key;
  key.reserve(n.size() * 2);
  for (const auto& e : n.elements())
    key.insert(key.end(), e.wires().begin(), e.wires().end());
  return key;
}

} // namespace

bool pre_exchange_admissible(const Network& network, std::size_t target) {
  if (target >= network.size() || network.has_fused())
    return false;
  return first_reversed(network, target) == network.size();
}

Network pre_exchange(const Network& network, std::size_t target) {
  require_valid(network);
  if (target >= network.size())
    throw TransformError(TransformFailure::index_out_of_range,
                         "pre-exchange target " + std::to_string(target + 1) + " outside 1.." +
                             std::to_string(network.size()));
  if (!network[target].is_link())
    throw TransformError(TransformFailure::not_a_link,
                         "pre-exchange target " + to_string(network[target]) + " is not a link");
  require_links_only(network, "pre-exchange");

  if (const auto bad = first_reversed(network, target); bad != network.size())
    throw TransformError(TransformFailure::reversing_prefix,
                         "pre-exchange at " + std::to_string(target + 1) + " would reverse element " +
                             std::to_string(bad + 1) + " " + to_string(network[bad]));

  const auto [i, j] = network[target].slot(0);
  std::vector<Element> out = network.elements();
  for (std::size_t k = 0; k < target; ++k)
    out[k] = Element::link(transpose(out[k].wire(0), i, j), transpose(out[k].wire(1), i, j));
  return network.with_elements(std::move(out));
}

Network deoffend(const Network& network, const engine::Options& options) {
  require_valid(network);
  require_links_only(network, "deoffend");
  const Rational half(1, 2);

  Network current = network;
  auto stats = engine::exhaustive_stats(current, options);
  Network best = current;
  Rational best_avg = stats.avg_swaps;

  const std::size_t rounds = network.size() * network.size();
  for (std::size_t round = 0; round < rounds; ++round) {
    const auto probs = link_probs(stats);
    std::size_t pick = current.size();
    for (std::size_t k = 0; k < probs.size() && pick == current.size(); ++k)
      if (probs[k] > half && pre_exchange_admissible(current, k))
        pick = k;
    if (pick == current.size())
      break;
    current = pre_exchange(current, pick);
    stats = engine::exhaustive_stats(current, options);
    if (stats.avg_swaps < best_avg) {
      best = current;
      best_avg = stats.avg_swaps;
    }
  }
  return best;
}

Network fuse(const Network& network, const engine::Options& options) {
  require_valid(network);
  std::vector<Element> elems = network.elements();

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < elems.size() && !changed; ++i) {
      if (!elems[i].is_link())
        continue;
      std::size_t j = i + 1;
      while (j < elems.size() && !elems[j].shares_wire(elems[i]))
        ++j;
      if (j == elems.size() || !elems[j].is_link() || elems[i].wire(1) != elems[j].wire(0))
        continue;

      // Everything strictly between i and j is disjoint from elems[i].
      std::vector<Element> moved = elems;
      const Element first = moved[i];
      moved.erase(moved.begin() + static_cast<std::ptrdiff_t>(i));
      moved.insert(moved.begin() + static_cast<std::ptrdiff_t>(j - 1), first);

      if (!engine::noninterference_check(network.with_elements(moved), j - 1, j, options))
        continue;
      moved[j - 1] = Element::fused2(first.wire(0), first.wire(1), moved[j].wire(1));
      moved.erase(moved.begin() + static_cast<std::ptrdiff_t>(j));
      elems = std::move(moved);
      changed = true;
    }
  }
  return network.with_elements(std::move(elems));
}

SearchResult minimize_max_swaps(const Network& network, std::size_t budget, const engine::Options& options) {
  require_valid(network);
  require_links_only(network, "minimize_max_swaps");
  if (network.order() > search_order_cap)
    throw LimitExceeded("pre-exchange search on order " + std::to_string(network.order()) + " refused",
                        search_order_cap);

  const Rational half(1, 2);
  struct Node {
    Network net;
    engine::StatsReport stats;
  };

  std::deque<Node> queue;
  std::set<std::vector<int>> seen{key_of(network)};
  queue.push_back({network, engine::exhaustive_stats(network, options)});
  const Rational start_avg = queue.front().stats.avg_swaps;

  SearchResult result{network, queue.front().stats.max_swaps, start_avg, 0, false};
  const auto better = [&](const engine::StatsReport& s) {
    return std::tie(s.max_swaps, s.avg_swaps) < std::tie(result.max_swaps, result.avg_swaps);
  };

  while (!queue.empty() && !result.budget_exhausted) {
    const Node node = std::move(queue.front());
    queue.pop_front();
    const auto probs = link_probs(node.stats);
    for (std::size_t k = 0; k < probs.size(); ++k) {
      if (probs[k] != half || !pre_exchange_admissible(node.net, k))
        continue;
      if (result.explored == budget) {
        result.budget_exhausted = true;
        break;
      }
      ++result.explored;
      Network next = pre_exchange(node.net, k);
      if (!seen.insert(key_of(next)).second)
        continue;
      auto stats = engine::exhaustive_stats(next, options);
      if (stats.avg_swaps != start_avg)
        throw std::logic_error("pre-exchange of a 1/2 link changed the average swap count");
      if (better(stats)) {
        result.network = next;
        result.max_swaps = stats.max_swaps;
        result.avg_swaps = stats.avg_swaps;
      }
      queue.push_back({std::move(next), std::move(stats)});
    }
  }
  return result;
}

} // namespace cen::transforms
