#pragma once

// Internal permutation and 0-1 vector enumeration.

#include <algorithm>
#include <array>
#include <cstdint>
#include <thread>
#include <vector>

#include "cen/core.hpp"

namespace cen::detail {

inline constexpr int max_wires = 16;
using State = std::array<std::uint8_t, max_wires>;

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k)
    f *= static_cast<std::uint64_t>(k);
  return f;
}

inline unsigned resolve_threads(unsigned requested) {
  if (requested == 0)
    requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

/// Visits the permutations of 1..order whose first value is `lead`, in
/// lexicographic order. `visit(const State&)` returns false to stop early;
/// the function then returns false as well.
template <class Visit>
bool for_each_permutation_with_lead(int order, int lead, Visit&& visit) {
  State perm{};
  perm[0] = static_cast<std::uint8_t>(lead);
  int k = 1;
  for (int v = 1; v <= order; ++v)
    if (v != lead)
      perm[k++] = static_cast<std::uint8_t>(v);
  do {
    if (!visit(perm))
      return false;
  } while (std::next_permutation(perm.begin() + 1, perm.begin() + order));
  return true;
}

template <class Visit>
bool for_each_permutation(int order, Visit&& visit) {
  for (int lead = 1; lead <= order; ++lead)
    if (!for_each_permutation_with_lead(order, lead, visit))
      return false;
  return true;
}

/// Deterministic parallel reduction over all permutations: one accumulator
/// per leading value, merged in ascending lead order whatever the thread count.
template <class Acc, class Make, class Visit, class Merge>
Acc reduce_permutations(int order, unsigned threads, Make make, Visit visit, Merge merge) {
  const int blocks = order;
  std::vector<Acc> partial;
  partial.reserve(static_cast<std::size_t>(blocks));
  for (int b = 0; b < blocks; ++b)
    partial.push_back(make());

  const auto work = [&](unsigned first, unsigned stride) {
    for (int b = static_cast<int>(first); b < blocks; b += static_cast<int>(stride)) {
      Acc& acc = partial[static_cast<std::size_t>(b)];
      for_each_permutation_with_lead(order, b + 1, [&](const State& p) {
        visit(acc, p);
        return true;
      });
    }
  };

  const unsigned n = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(blocks));
  if (n <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t)
      pool.emplace_back(work, t, n);
  }

  Acc total = make();
  for (auto& p : partial)
    merge(total, p);
  return total;
}

/// Runs the network over `state` in place; outcomes go to `out` when given.
inline int evaluate(const std::vector<Element>& elements, State& state, ElementOutcome* out = nullptr) {
  int swaps = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto o = detail::apply_unchecked(elements[i], state.data());
    swaps += o.swaps;
    if (out)
      out[i] = o;
  }
  return swaps;
}

inline State binary_state(std::uint32_t bits, int order) {
  State s{};
  for (int w = 0; w < order; ++w)
    s[static_cast<std::size_t>(w)] = static_cast<std::uint8_t>((bits >> w) & 1u);
  return s;
}

} // namespace cen::detail
