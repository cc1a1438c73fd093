#pragma once

// Exhaustive analysis of CE networks.
//
// Statistics are exact: every permutation of 1..N is evaluated once and
// per-slot swap counts are divided by N!. Sortedness and settledness of
// link-only networks use the 2^N 0-1 vectors instead. Fused elements are not
// comparators (the elision test does not commute with monotone maps), so
// networks containing them fall back to permutations.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "cen/core.hpp"
#include "cen/rational.hpp"

namespace cen::engine {

struct Limits {
  int max_permutation_order = 10;
  int max_binary_order = 16;
};

struct Options {
  Limits limits;
  unsigned threads = 1; // 0 = hardware concurrency
  Rational cost_weight{2};
  std::size_t worst_input_cap = 32;
};

struct ElementStats {
  std::vector<Rational> slot_probs; // one per constituent CE, wire order
  Rational activation;              // probability that any slot swapped
};

struct StatsReport {
  int order = 0;
  std::size_t elements = 0;
  std::size_t links = 0;
  std::uint64_t input_count = 0;

  std::vector<ElementStats> element_stats;

  Rational avg_swaps;
  int max_swaps = 0;
  std::vector<std::vector<int>> worst_inputs; // lexicographic, at most worst_input_cap
  std::uint64_t worst_input_count = 0;

  Rational avg_comparisons;
  int max_comparisons = 0;

  std::map<int, std::uint64_t> histogram;

  std::vector<int> settled;
  int disorder = 0;
  Rational disorder_fraction;

  std::size_t stage_count = 0;
  Rational cost_weight;
  Rational weighted_cost; // avg_comparisons + cost_weight * avg_swaps

  /// Slot probabilities flattened in element order.
  std::vector<Rational> slot_probs() const;
};

enum class PreconditionFailure {
  index_out_of_range,
  not_a_link,
  no_single_shared_wire,
  wrong_order,
  rank_out_of_range,
};

class PreconditionError : public ContractViolation {
public:
  PreconditionError(PreconditionFailure reason, const std::string& what)
      : ContractViolation(what), reason_(reason) {}

  PreconditionFailure reason() const noexcept { return reason_; }

private:
  PreconditionFailure reason_;
};

StatsReport exhaustive_stats(const Network& network, const Options& options = {});

std::map<int, std::uint64_t> histogram(const Network& network, const Options& options = {});

/// Number of permutation inputs the network leaves unsorted.
std::uint64_t unsorted_permutations(const Network& network, const Options& options = {});

/// Link-only networks: all 2^N 0-1 vectors. With fused elements: all N!
/// permutations (permutation cap applies).
bool verify_sorts(const Network& network, const Options& options = {});

/// True iff output[position] is the rank-th smallest value for every
/// permutation input (both 1-based).
bool verify_selection(const Network& network, int rank, int position, const Options& options = {});

/// 1-based wires holding their sorted-rank value for every input; same
/// input domain rule as verify_sorts.
std::vector<int> settled_positions(const Network& network, const Options& options = {});

/// Elements are 0-based indices. Both must be links sharing exactly one wire,
/// with `first` earlier in the sequence. True iff no permutation input makes
/// both swap.
bool noninterference_check(const Network& network, std::size_t first, std::size_t second,
                           const Options& options = {});

struct JointSwapTable {
  // counts[a][b]: a = first element swapped, b = second element swapped
  std::array<std::array<std::uint64_t, 2>, 2> counts{};
  std::uint64_t total = 0;

  Rational p_first() const;
  Rational p_second() const;
  /// P(second swaps | first swaps); throws ContractViolation when the first never swaps.
  Rational p_second_given_first() const;
  Rational p_first_given_second() const;
};

/// 2x2 activation counts for two elements (0-based; may be equal).
JointSwapTable joint_swap_table(const Network& network, std::size_t i, std::size_t j,
                                const Options& options = {});

} // namespace cen::engine
