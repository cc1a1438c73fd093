#include <doctest.h>

#include <random>

#include "cen/catalog.hpp"
#include "cen/dsl.hpp"
#include "cen/engine.hpp"
#include "cen/report.hpp"
#include "oracle.hpp"

using namespace cen;
using engine::exhaustive_stats;

namespace {
Network net(const char* text, int order) { return dsl::parse(text, order); }
std::vector<Rational> rs(std::initializer_list<std::pair<int, int>> v) {
  std::vector<Rational> out;
  for (auto [a, b] : v)
    out.emplace_back(a, b);
  return out;
}
} // namespace

TEST_SUITE("engine") {

TEST_CASE("three-wire sorters") {
  auto r = exhaustive_stats(net("23-12-23-", 3));
  CHECK(r.slot_probs() == rs({{1, 2}, {2, 3}, {1, 3}}));
  CHECK(r.avg_swaps == Rational(3, 2));
  CHECK(r.max_swaps == 3);
  CHECK(r.disorder == 0);
  CHECK(r.worst_inputs == std::vector<std::vector<int>>{{3, 2, 1}});
  CHECK(r.histogram == std::map<int, std::uint64_t>{{0, 1}, {1, 2}, {2, 2}, {3, 1}});
  CHECK(r.avg_comparisons == Rational(3));
  CHECK(r.weighted_cost == Rational(6));

  r = exhaustive_stats(net("13-12-23-", 3));
  CHECK(r.slot_probs() == rs({{1, 2}, {1, 3}, {1, 3}}));
  CHECK(r.avg_swaps == Rational(7, 6));
  CHECK(r.max_swaps == 2);

  r = exhaustive_stats(net("13-123-", 3));
  CHECK(r.avg_swaps == Rational(7, 6));
  CHECK(r.avg_comparisons == Rational(1) + Rational(1) + Rational(2, 3));
  CHECK(r.stage_count == 2);
  CHECK(r.element_stats[1].activation == Rational(2, 3));
}

TEST_CASE("cost weight") {
  engine::Options o;
  o.cost_weight = Rational(1, 2);
  const auto r = exhaustive_stats(net("23-12-23-", 3), o);
  CHECK(r.weighted_cost == Rational(3) + Rational(3, 4));
}

TEST_CASE("empty networks") {
  auto r = exhaustive_stats(Network(3));
  CHECK(r.avg_swaps == Rational(0));
  CHECK(r.max_swaps == 0);
  CHECK(r.histogram == std::map<int, std::uint64_t>{{0, 6}});
  CHECK(r.settled.empty());
  CHECK(r.disorder == 3);
  CHECK(engine::histogram(Network(4)) == std::map<int, std::uint64_t>{{0, 24}});
  CHECK(engine::verify_sorts(Network(1)));
  CHECK(engine::settled_positions(Network(2)).empty());
}

TEST_CASE("histograms") {
  CHECK(engine::histogram(net("13-24-12-34-23-", 4)) ==
        std::map<int, std::uint64_t>{{0, 1}, {1, 5}, {2, 8}, {3, 6}, {4, 3}, {5, 1}});
  CHECK(engine::histogram(net("23-14-12-34-23-", 4)) ==
        std::map<int, std::uint64_t>{{0, 1}, {1, 4}, {2, 8}, {3, 8}, {4, 3}});
}

TEST_CASE("verify and select") {
  CHECK(engine::verify_sorts(net("13-12-23-", 3)));
  const auto f10a = net("13-24-1234-", 4);
  CHECK_FALSE(engine::verify_sorts(f10a));
  CHECK(engine::unsorted_permutations(f10a) == 4);
  CHECK(engine::verify_selection(f10a, 1, 1));
  CHECK(engine::verify_selection(f10a, 4, 4));
  CHECK_FALSE(engine::verify_selection(f10a, 2, 2));
  CHECK_THROWS_AS(engine::verify_selection(f10a, 5, 1), engine::PreconditionError);

  const auto sorter = net("13-12-23-", 3);
  for (int k = 1; k <= 3; ++k)
    CHECK(engine::verify_selection(sorter, k, k));
}

TEST_CASE("median network selection and settledness") {
  const auto m = catalog::get("median9-old-mmm").network;
  CHECK(engine::verify_selection(m, 5, 5));
  CHECK(engine::verify_selection(m, 1, 1));
  CHECK(engine::verify_selection(m, 9, 9));
  CHECK(engine::settled_positions(m) == std::vector<int>{1, 5, 9});
}

TEST_CASE("noninterference") {
  CHECK(engine::noninterference_check(net("13-12-23-", 3), 1, 2));
  CHECK_FALSE(engine::noninterference_check(net("12-23-", 3), 0, 1));
  CHECK_THROWS_AS(engine::noninterference_check(net("12-34-", 4), 0, 1), engine::PreconditionError);
  CHECK_THROWS_AS(engine::noninterference_check(net("12-23-", 3), 1, 0), engine::PreconditionError);
  CHECK_THROWS_AS(engine::noninterference_check(net("12-23-", 3), 0, 5), engine::PreconditionError);
}

TEST_CASE("joint swap table") {
  const auto f12 = net("23-14-12-34-23-", 4);
  const auto t = engine::joint_swap_table(f12, 2, 3);
  CHECK(t.total == 24);
  CHECK(t.p_first() == Rational(1, 2));
  CHECK(t.p_second() == Rational(1, 2));
  CHECK(t.p_second_given_first() == Rational(1, 3));
  CHECK(t.p_first_given_second() == Rational(1, 3));

  const auto d = engine::joint_swap_table(f12, 2, 2);
  CHECK(d.counts[0][1] == 0);
  CHECK(d.counts[1][0] == 0);

  const auto z = engine::joint_swap_table(net("12-12-", 2), 0, 1);
  CHECK(z.counts[1][1] == 0);
  CHECK_THROWS_AS(z.p_first_given_second(), ContractViolation);
}

TEST_CASE("limits") {
  engine::Options o;
  o.limits.max_permutation_order = 4;
  CHECK_THROWS_AS(exhaustive_stats(catalog::batcher(8), o), LimitExceeded);
  o.limits.max_binary_order = 4;
  CHECK_THROWS_AS(engine::verify_sorts(catalog::batcher(8), o), LimitExceeded);
  CHECK(engine::verify_sorts(catalog::batcher(16)));
}

TEST_CASE("statistics agree with the oracle") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 5;
    const auto nw = oracle::random_network(rng, n, 1 + trial % 11, 0.35);
    const auto r = exhaustive_stats(nw);
    const auto o = oracle::permutation_stats(oracle::from(nw), n);
    REQUIRE(r.input_count == o.inputs);
    for (std::size_t e = 0; e < nw.size(); ++e)
      for (std::size_t s = 0; s < nw[e].slot_count(); ++s)
        CHECK(r.element_stats[e].slot_probs[s] ==
              Rational(static_cast<std::int64_t>(o.slot_swaps[e][s]), static_cast<std::int64_t>(o.inputs)));
    CHECK(r.avg_swaps ==
          Rational(static_cast<std::int64_t>(o.total_swaps), static_cast<std::int64_t>(o.inputs)));
    CHECK(r.max_swaps == o.max_swaps);
    CHECK(r.histogram == o.histogram);
    CHECK(engine::verify_sorts(nw) == o.sorts);

    Rational sum(0);
    for (const auto& p : r.slot_probs())
      sum += p;
    CHECK(sum == r.avg_swaps);
    CHECK(r.disorder == n - static_cast<int>(r.settled.size()));
  }
}

TEST_CASE("0-1 and permutation settledness agree for link-only networks") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 5;
    const auto nw = oracle::random_network(rng, n, 2 + trial % 12);
    const auto perm = oracle::permutation_stats(oracle::from(nw), n);
    const auto bin = oracle::binary_settled(oracle::from(nw), n);
    std::vector<int> want;
    for (int w = 0; w < n; ++w) {
      REQUIRE(perm.settled[static_cast<std::size_t>(w)] == bin[static_cast<std::size_t>(w)]);
      if (bin[static_cast<std::size_t>(w)])
        want.push_back(w + 1);
    }
    CHECK(engine::settled_positions(nw) == want);
    CHECK(engine::verify_sorts(nw) == (engine::unsorted_permutations(nw) == 0));
  }
}

TEST_CASE("fused networks are judged on permutations") {
  // Unguarded fused elements can break the 0-1 principle; find a witness
  // and check the engine follows the permutation verdict.
  std::mt19937 rng(8);
  int witnesses = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 3 + trial % 3;
    const auto nw = oracle::random_network(rng, n, 3 + trial % 8, 0.5);
    const auto perm = oracle::permutation_stats(oracle::from(nw), n);
    const auto bin = oracle::binary_settled(oracle::from(nw), n);
    std::vector<int> want;
    for (int w = 0; w < n; ++w)
      if (perm.settled[static_cast<std::size_t>(w)])
        want.push_back(w + 1);
    REQUIRE(engine::settled_positions(nw) == want);
    REQUIRE(engine::verify_sorts(nw) == perm.sorts);
    if (bin != perm.settled)
      ++witnesses;
  }
  CHECK(witnesses > 0);
}

TEST_CASE("thread count does not change results") {
  const auto m = catalog::get("median9-new-mmm").network;
  engine::Options one;
  engine::Options four;
  four.threads = 4;
  CHECK(report::to_json(exhaustive_stats(m, one)).dump() == report::to_json(exhaustive_stats(m, four)).dump());
}

}
