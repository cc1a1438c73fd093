#pragma once

// Networks reconstructed from their published construction rules, with the
// published statistics attached as fixtures.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cen/core.hpp"
#include "cen/engine.hpp"
#include "cen/rational.hpp"

namespace cen::catalog {

/// A value published as a rounded decimal.
struct Decimal {
  double value;
  double tolerance;
};

/// Only the fields a published source states are set.
struct Expected {
  std::optional<std::size_t> links;
  std::optional<Rational> avg_swaps;
  std::optional<Decimal> avg_swaps_decimal;
  std::optional<int> max_swaps;
  std::optional<std::size_t> stages;
  std::optional<std::vector<Rational>> slot_probs;
  std::optional<std::map<int, std::uint64_t>> histogram;
  std::optional<std::vector<int>> settled;
  std::optional<std::vector<int>> worst_input; // one input attaining max_swaps
  std::optional<bool> sorts;
  std::vector<int> selects; // positions p with verify_selection(p, p)
};

struct CatalogEntry {
  std::string name;
  Network network;
  Expected expected;
  std::string provenance;
  /// Fields whose recomputed value is known to disagree with the published
  /// one, with the reason in `note`.
  std::vector<std::string> known_mismatches;
  std::string note;
};

struct ListItem {
  std::string name;
  std::string provenance;
  std::string summary;
  bool generator = false;
};

/// All entries in a stable order.
std::vector<ListItem> list();

/// Throws std::out_of_range for unknown names. "batcher" is batcher(8);
/// "batcher-<n>" selects another power of two.
CatalogEntry get(std::string_view name);

/// Batcher's odd-even mergesort on n wires (n a power of two, 1..16).
Network batcher(int n);

/// Three-sorters used by the 3x3 median networks.
std::vector<Element> s3_old(int a, int b, int c);
std::vector<Element> s3_new(int a, int b, int c);

struct Mismatch {
  std::string field;
  std::string expected;
  std::string actual;
};

/// Recomputes every expected field with the engine; empty means all match.
std::vector<Mismatch> check(const CatalogEntry& entry, const engine::Options& options = {});

} // namespace cen::catalog
