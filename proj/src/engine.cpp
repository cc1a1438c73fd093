#include "cen/engine.hpp"

#include <algorithm>
#include <bit>

#include "enumerate.hpp"

namespace cen::engine {
namespace {

using detail::State;

void require_permutation_order(const Network& n, const Options& opt) {
  if (n.order() > opt.limits.max_permutation_order)
    throw LimitExceeded("permutation enumeration of order " + std::to_string(n.order()) + " refused",
                        opt.limits.max_permutation_order);
  if (n.order() > detail::max_wires)
    throw LimitExceeded("order " + std::to_string(n.order()) + " exceeds the evaluator width", detail::max_wires);
}

void require_binary_order(const Network& n, const Options& opt) {
  const int cap = std::min(opt.limits.max_binary_order, detail::max_wires);
  if (n.order() > cap)
    throw LimitExceeded("0-1 enumeration of order " + std::to_string(n.order()) + " refused", cap);
}

void require_index(const Network& n, std::size_t idx, const char* what) {
  if (idx >= n.size())
    throw PreconditionError(PreconditionFailure::index_out_of_range,
                            std::string(what) + " index " + std::to_string(idx + 1) + " outside 1.." +
                                std::to_string(n.size()));
}

struct StatsAcc {
  std::vector<std::uint64_t> slot_swaps;  // flattened
  std::vector<std::uint64_t> activations; // per element
  std::vector<std::uint64_t> hist;        // by total swaps
  std::uint64_t comparisons = 0;
  int max_comparisons = 0;
  int max_swaps = -1;
  std::uint64_t worst_count = 0;
  std::vector<State> worst;
  std::uint32_t settled_mask = 0;
  std::uint64_t inputs = 0;
};

} // namespace

std::vector<Rational> StatsReport::slot_probs() const {
  std::vector<Rational> out;
  for (const auto& e : element_stats)
    out.insert(out.end(), e.slot_probs.begin(), e.slot_probs.end());
  return out;
}

StatsReport exhaustive_stats(const Network& network, const Options& options) {
  require_valid(network);
  require_permutation_order(network, options);

  const int order = network.order();
  const auto& elements = network.elements();
  const std::size_t links = network.link_count();
  const std::size_t cap = options.worst_input_cap;
  const std::uint32_t all_wires = order >= 32 ? ~0u : ((1u << order) - 1u);

  std::vector<std::size_t> slot_base(elements.size());
  for (std::size_t i = 0, base = 0; i < elements.size(); base += elements[i].slot_count(), ++i)
    slot_base[i] = base;

  const auto make = [&] {
    StatsAcc a;
    a.slot_swaps.assign(links, 0);
    a.activations.assign(elements.size(), 0);
    a.hist.assign(links + 1, 0);
    a.settled_mask = all_wires;
    return a;
  };

  const auto visit = [&](StatsAcc& acc, const State& perm) {
    State s = perm;
    int swaps = 0;
    int comparisons = 0;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const auto o = detail::apply_unchecked(elements[i], s.data());
      swaps += o.swaps;
      comparisons += o.comparisons;
      if (o.swaps) {
        ++acc.activations[i];
        for (std::size_t k = 0; k < elements[i].slot_count(); ++k)
          acc.slot_swaps[slot_base[i] + k] += o.swapped[k];
      }
    }
    ++acc.inputs;
    ++acc.hist[static_cast<std::size_t>(swaps)];
    acc.comparisons += static_cast<std::uint64_t>(comparisons);
    acc.max_comparisons = std::max(acc.max_comparisons, comparisons);
    if (swaps > acc.max_swaps) {
      acc.max_swaps = swaps;
      acc.worst_count = 0;
      acc.worst.clear();
    }
    if (swaps == acc.max_swaps) {
      ++acc.worst_count;
      if (acc.worst.size() < cap)
        acc.worst.push_back(perm);
    }
    for (int w = 0; w < order; ++w)
      if (s[static_cast<std::size_t>(w)] != w + 1)
        acc.settled_mask &= ~(1u << w);
  };

  const auto merge = [&](StatsAcc& into, const StatsAcc& from) {
    for (std::size_t k = 0; k < links; ++k)
      into.slot_swaps[k] += from.slot_swaps[k];
    for (std::size_t k = 0; k < elements.size(); ++k)
      into.activations[k] += from.activations[k];
    for (std::size_t k = 0; k <= links; ++k)
      into.hist[k] += from.hist[k];
    into.comparisons += from.comparisons;
    into.max_comparisons = std::max(into.max_comparisons, from.max_comparisons);
    into.inputs += from.inputs;
    into.settled_mask &= from.settled_mask;
    if (from.max_swaps > into.max_swaps) {
      into.max_swaps = from.max_swaps;
      into.worst_count = 0;
      into.worst.clear();
    }
    if (from.max_swaps == into.max_swaps) {
      into.worst_count += from.worst_count;
      for (const auto& w : from.worst)
        if (into.worst.size() < cap)
          into.worst.push_back(w);
    }
  };

  const StatsAcc acc = detail::reduce_permutations<StatsAcc>(order, options.threads, make, visit, merge);
  const auto n = static_cast<std::int64_t>(acc.inputs);

  StatsReport r;
  r.order = order;
  r.elements = elements.size();
  r.links = links;
  r.input_count = acc.inputs;
  r.element_stats.resize(elements.size());
  std::uint64_t total_swaps = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto& es = r.element_stats[i];
    for (std::size_t k = 0; k < elements[i].slot_count(); ++k) {
      const auto c = acc.slot_swaps[slot_base[i] + k];
      total_swaps += c;
      es.slot_probs.emplace_back(static_cast<std::int64_t>(c), n);
    }
    es.activation = Rational(static_cast<std::int64_t>(acc.activations[i]), n);
  }
  r.avg_swaps = Rational(static_cast<std::int64_t>(total_swaps), n);
  r.max_swaps = acc.max_swaps;
  r.worst_input_count = acc.worst_count;
  for (const auto& w : acc.worst)
    r.worst_inputs.emplace_back(w.begin(), w.begin() + order);
  r.avg_comparisons = Rational(static_cast<std::int64_t>(acc.comparisons), n);
  r.max_comparisons = acc.max_comparisons;
  for (std::size_t k = 0; k <= links; ++k)
    if (acc.hist[k])
      r.histogram.emplace(static_cast<int>(k), acc.hist[k]);
  for (int w = 0; w < order; ++w)
    if (acc.settled_mask & (1u << w))
      r.settled.push_back(w + 1);
  r.disorder = order - static_cast<int>(r.settled.size());
  r.disorder_fraction = Rational(r.disorder, order);
  r.stage_count = schedule(network).stage_count();
  r.cost_weight = options.cost_weight;
  r.weighted_cost = r.avg_comparisons + options.cost_weight * r.avg_swaps;
  return r;
}

std::map<int, std::uint64_t> histogram(const Network& network, const Options& options) {
  return exhaustive_stats(network, options).histogram;
}

std::uint64_t unsorted_permutations(const Network& network, const Options& options) {
  require_valid(network);
  require_permutation_order(network, options);
  const int order = network.order();
  const auto& elements = network.elements();
  return detail::reduce_permutations<std::uint64_t>(
      order, options.threads, [] { return std::uint64_t{0}; },
      [&](std::uint64_t& acc, const State& perm) {
        State s = perm;
        detail::evaluate(elements, s);
        for (int w = 0; w < order; ++w)
          if (s[static_cast<std::size_t>(w)] != w + 1) {
            ++acc;
            break;
          }
      },
      [](std::uint64_t& into, std::uint64_t from) { into += from; });
}

bool verify_sorts(const Network& network, const Options& options) {
  require_valid(network);
  const int order = network.order();
  const auto& elements = network.elements();
  if (network.has_fused()) {
    require_permutation_order(network, options);
    return detail::for_each_permutation(order, [&](const State& perm) {
      State s = perm;
      detail::evaluate(elements, s);
      for (int w = 0; w < order; ++w)
        if (s[static_cast<std::size_t>(w)] != w + 1)
          return false;
      return true;
    });
  }
  require_binary_order(network, options);
  const std::uint32_t end = 1u << order;
  for (std::uint32_t bits = 0; bits < end; ++bits) {
    State s = detail::binary_state(bits, order);
    detail::evaluate(elements, s);
    for (int w = 1; w < order; ++w)
      if (s[static_cast<std::size_t>(w - 1)] > s[static_cast<std::size_t>(w)])
        return false;
  }
  return true;
}

bool verify_selection(const Network& network, int rank, int position, const Options& options) {
  require_valid(network);
  if (rank < 1 || rank > network.order() || position < 1 || position > network.order())
    throw PreconditionError(PreconditionFailure::rank_out_of_range,
                            "rank and position must lie in 1.." + std::to_string(network.order()));
  require_permutation_order(network, options);
  const auto& elements = network.elements();
  const auto p = static_cast<std::size_t>(position - 1);
  return detail::for_each_permutation(network.order(), [&](const State& perm) {
    State s = perm;
    detail::evaluate(elements, s);
    return s[p] == rank;
  });
}

std::vector<int> settled_positions(const Network& network, const Options& options) {
  require_valid(network);
  const int order = network.order();
  const auto& elements = network.elements();
  std::uint32_t settled = (1u << order) - 1;
  if (network.has_fused()) {
    require_permutation_order(network, options);
    detail::for_each_permutation(order, [&](const State& perm) {
      State s = perm;
      detail::evaluate(elements, s);
      for (int w = 0; w < order; ++w)
        if (s[static_cast<std::size_t>(w)] != w + 1)
          settled &= ~(1u << w);
      return settled != 0;
    });
  } else {
    require_binary_order(network, options);
    const std::uint32_t end = 1u << order;
    for (std::uint32_t bits = 0; bits < end && settled; ++bits) {
      State s = detail::binary_state(bits, order);
      detail::evaluate(elements, s);
      const int zeros = order - std::popcount(bits);
      for (int w = 0; w < order; ++w) {
        const std::uint8_t expect = w >= zeros ? 1 : 0;
        if (s[static_cast<std::size_t>(w)] != expect)
          settled &= ~(1u << w);
      }
    }
  }
  std::vector<int> out;
  for (int w = 0; w < order; ++w)
    if (settled & (1u << w))
      out.push_back(w + 1);
  return out;
}

bool noninterference_check(const Network& network, std::size_t first, std::size_t second,
                           const Options& options) {
  require_valid(network);
  require_index(network, first, "first");
  require_index(network, second, "second");
  const Element& a = network[first];
  const Element& b = network[second];
  if (!a.is_link() || !b.is_link())
    throw PreconditionError(PreconditionFailure::not_a_link, "noninterference_check needs two links, got " +
                                                                 to_string(a) + " and " + to_string(b));
  if (a.shared_wire_count(b) != 1)
    throw PreconditionError(PreconditionFailure::no_single_shared_wire,
                            "links " + to_string(a) + " and " + to_string(b) + " must share exactly one wire");
  if (first >= second)
    throw PreconditionError(PreconditionFailure::wrong_order,
                            "first element must precede second (" + std::to_string(first + 1) +
                                " >= " + std::to_string(second + 1) + ")");
  require_permutation_order(network, options);

  // Elements after `second` cannot influence either outcome.
  const std::vector<Element> prefix(network.elements().begin(),
                                    network.elements().begin() + static_cast<std::ptrdiff_t>(second) + 1);
  std::vector<ElementOutcome> outcomes(prefix.size());
  return detail::for_each_permutation(network.order(), [&](const State& perm) {
    State s = perm;
    detail::evaluate(prefix, s, outcomes.data());
    return !(outcomes[first].active() && outcomes[second].active());
  });
}

Rational JointSwapTable::p_first() const {
  return Rational(static_cast<std::int64_t>(counts[1][0] + counts[1][1]), static_cast<std::int64_t>(total));
}

Rational JointSwapTable::p_second() const {
  return Rational(static_cast<std::int64_t>(counts[0][1] + counts[1][1]), static_cast<std::int64_t>(total));
}

Rational JointSwapTable::p_second_given_first() const {
  const auto given = counts[1][0] + counts[1][1];
  if (given == 0)
    throw ContractViolation("the first element never swaps; conditional probability undefined");
  return Rational(static_cast<std::int64_t>(counts[1][1]), static_cast<std::int64_t>(given));
}

Rational JointSwapTable::p_first_given_second() const {
  const auto given = counts[0][1] + counts[1][1];
  if (given == 0)
    throw ContractViolation("the second element never swaps; conditional probability undefined");
  return Rational(static_cast<std::int64_t>(counts[1][1]), static_cast<std::int64_t>(given));
}

JointSwapTable joint_swap_table(const Network& network, std::size_t i, std::size_t j, const Options& options) {
  require_valid(network);
  require_index(network, i, "first");
  require_index(network, j, "second");
  require_permutation_order(network, options);
  const auto& elements = network.elements();
  return detail::reduce_permutations<JointSwapTable>(
      network.order(), options.threads, [] { return JointSwapTable{}; },
      [&](JointSwapTable& t, const State& perm) {
        thread_local std::vector<ElementOutcome> outcomes;
        outcomes.resize(elements.size());
        State s = perm;
        detail::evaluate(elements, s, outcomes.data());
        ++t.counts[outcomes[i].active()][outcomes[j].active()];
        ++t.total;
      },
      [](JointSwapTable& into, const JointSwapTable& from) {
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            into.counts[a][b] += from.counts[a][b];
        into.total += from.total;
      });
}

} // namespace cen::engine
