#pragma once

// Network rewrites: pre-exchange (transposition), de-offending, fusion into
// 2-ops and a bounded search that lowers the worst-case swap count.
// Element indices are 0-based.

#include <cstddef>
#include <string>

#include "cen/core.hpp"
#include "cen/engine.hpp"

namespace cen::transforms {

enum class TransformFailure {
  index_out_of_range,
  not_a_link,
  fused_elements_present,
  reversing_prefix, // relabeling would turn an earlier link into a reversed comparator
};

class TransformError : public ContractViolation {
public:
  TransformError(TransformFailure reason, const std::string& what) : ContractViolation(what), reason_(reason) {}

  TransformFailure reason() const noexcept { return reason_; }

private:
  TransformFailure reason_;
};

/// True when pre_exchange(network, target) is defined: the target is a link,
/// the network has no fused elements, and relabeling the prefix by the
/// target's transposition keeps every earlier link's min on its lower wire.
bool pre_exchange_admissible(const Network& network, std::size_t target);

/// Relabels every element before `target` by the transposition of the
/// target's endpoints. The result equals the input network composed with a
/// fixed input transposition, so sorting ability is kept and the target's
/// swap probability p becomes 1 - p. Throws TransformError.
Network pre_exchange(const Network& network, std::size_t target);

/// Repeatedly pre-exchanges the earliest admissible element whose swap
/// probability exceeds 1/2. Stops after element_count^2 rounds and returns
/// the lowest-average network seen.
Network deoffend(const Network& network, const engine::Options& options = {});

/// Merges wire-sharing link pairs (a,b),(b,c) into Fused2(a,b,c) when the
/// exhaustive non-interference check passes. A pair separated only by
/// elements disjoint from the first link is brought together first.
Network fuse(const Network& network, const engine::Options& options = {});

struct SearchResult {
  Network network;
  int max_swaps = 0;
  Rational avg_swaps;
  std::size_t explored = 0;     // pre_exchange applications tried
  bool budget_exhausted = false;
};

/// Breadth-first search over pre_exchange applications restricted to links
/// with swap probability exactly 1/2. Picks the smallest max_swaps, then the
/// smallest average, then the earliest discovered network.
SearchResult minimize_max_swaps(const Network& network, std::size_t budget = 10000,
                                const engine::Options& options = {});

} // namespace cen::transforms
