// Acceptance gate: one PASS/FAIL line per criterion, with the checks behind
// each printed above it. `--criterion N` runs a single one.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cen/catalog.hpp"
#include "cen/dsl.hpp"
#include "cen/engine.hpp"
#include "cen/render.hpp"
#include "cen/report.hpp"
#include "cen/transforms.hpp"
#include "oracle.hpp"

using namespace cen;

namespace {

constexpr double decimal_tolerance = 0.005;
constexpr double batcher_tolerance = 0.01;

class Criterion {
public:
  void expect(bool ok, const std::string& what) {
    std::cout << "    " << (ok ? "ok       " : "MISMATCH ") << what << '\n';
    pass_ = pass_ && ok;
  }
  void note(const std::string& text) { std::cout << "    note: " << text << '\n'; }
  bool passed() const { return pass_; }

private:
  bool pass_ = true;
};

std::string fracs(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? " " : "") + format_fraction(v[i]);
  return s;
}

std::string hist(const std::map<int, std::uint64_t>& h) {
  std::string s = "{";
  for (const auto& [k, c] : h)
    s += (s.size() > 1 ? "," : "") + std::to_string(k) + ":" + std::to_string(c);
  return s + "}";
}

std::vector<Rational> rs(std::initializer_list<std::pair<int, int>> v) {
  std::vector<Rational> out;
  for (auto [a, b] : v)
    out.emplace_back(a, b);
  return out;
}

template <class A, class B>
void eq(Criterion& c, const std::string& label, const A& actual, const B& expected, const std::string& shown) {
  c.expect(actual == expected, label + " = " + shown);
}

double as_double(const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

void c1(Criterion& c) {
  const auto r = engine::exhaustive_stats(catalog::get("fig1a").network);
  const auto want = rs({{1, 2}, {2, 3}, {1, 3}});
  eq(c, "fig1a probabilities " + fracs(r.slot_probs()), r.slot_probs(), want, fracs(want));
  eq(c, "avg_swaps " + format_fraction(r.avg_swaps), r.avg_swaps, Rational(3, 2), "3/2");
  eq(c, "max_swaps " + std::to_string(r.max_swaps), r.max_swaps, 3, "3");
  eq(c, "disorder " + std::to_string(r.disorder), r.disorder, 0, "0");
}

void c2(Criterion& c) {
  const auto r = engine::exhaustive_stats(catalog::get("fig2a").network);
  std::vector<std::int64_t> totals;
  for (const auto& p : r.slot_probs())
    totals.push_back((p * static_cast<std::int64_t>(r.input_count)).numerator());
  std::string shown;
  for (auto t : totals)
    shown += std::to_string(t) + " ";
  c.expect(r.input_count == 6 && totals == std::vector<std::int64_t>{3, 2, 2},
           "fig2a per-link swap totals " + shown + "over " + std::to_string(r.input_count) + " inputs = 3 2 2 over 6");
  eq(c, "avg_swaps " + format_fraction(r.avg_swaps), r.avg_swaps, Rational(7, 6), "7/6");
  eq(c, "max_swaps " + std::to_string(r.max_swaps), r.max_swaps, 2, "2");
}

void c3(Criterion& c) {
  const auto e = catalog::get("median9-old-mmm");
  const auto r = engine::exhaustive_stats(e.network);
  const auto& want = *e.expected.slot_probs;
  c.expect(r.slot_probs() == want, "all 21 link probabilities match the published list");
  if (r.slot_probs() != want)
    c.note("computed " + fracs(r.slot_probs()));
  const auto p = r.slot_probs();
  c.expect(p.size() == 21 && p[18] == Rational(19, 70) && p[19] == Rational(5, 14) && p[20] == Rational(1, 7),
           "links 19..21 = 19/70 5/14 1/7");
  eq(c, "avg_swaps " + format_fraction(r.avg_swaps), r.avg_swaps, Rational(342, 35), "342/35");
  eq(c, "stages " + std::to_string(r.stage_count), r.stage_count, std::size_t{9}, "9");
  std::vector<int> reverse(9);
  std::iota(reverse.rbegin(), reverse.rend(), 1);
  const int at_reverse = run(e.network, reverse).total_swaps;
  c.expect(at_reverse == r.max_swaps, "reverse-sorted input swaps " + std::to_string(at_reverse) + " = max_swaps " +
                                          std::to_string(r.max_swaps));
  if (at_reverse != r.max_swaps)
    c.note("median9-old-mmm: " + e.note);
}

void c4(Criterion& c) {
  struct Row {
    const char* name;
    double avg;
    int max;
    std::size_t stages;
  };
  const Row rows[] = {
      {"median9-old-bare", 9.105, 19, 9}, {"median9-old-mmm", 9.771, 21, 9}, {"median9-old-full", 11.56, 25, 11},
      {"median9-new-bare", 6.99, 13, 6},  {"median9-new-mmm", 7.657, 14, 6}, {"median9-new-full", 9.443, 18, 8},
  };
  for (const auto& row : rows) {
    const auto e = catalog::get(row.name);
    const auto r = engine::exhaustive_stats(e.network);
    std::ostringstream want;
    want << row.avg;
    c.expect(std::abs(as_double(r.avg_swaps) - row.avg) <= decimal_tolerance,
             std::string(row.name) + " avg " + format_fraction(r.avg_swaps) + " (" + format_decimal(r.avg_swaps) +
                 ") ~ " + want.str());
    c.expect(r.max_swaps == row.max,
             std::string(row.name) + " max " + std::to_string(r.max_swaps) + " = " + std::to_string(row.max));
    const bool stages_ok = r.stage_count == row.stages;
    c.expect(stages_ok, std::string(row.name) + " stages " + std::to_string(r.stage_count) + " = " +
                            std::to_string(row.stages));
    if (!stages_ok && !e.note.empty())
      c.note(std::string(row.name) + ": " + e.note);
  }
}

void c5(Criterion& c) {
  const auto f10a = catalog::get("fig10a").network;
  const auto unsorted = engine::unsorted_permutations(f10a);
  c.expect(!engine::verify_sorts(f10a) && Rational(static_cast<std::int64_t>(unsorted), 24) == Rational(1, 6),
           "fig10a leaves " + std::to_string(unsorted) + " of 24 inputs unsorted = 1/6");

  const auto f11a = catalog::get("fig11a").network;
  const auto h11 = engine::histogram(f11a);
  const std::map<int, std::uint64_t> want11{{0, 1}, {1, 5}, {2, 8}, {3, 6}, {4, 3}, {5, 1}};
  eq(c, "fig11a histogram " + hist(h11), h11, want11, hist(want11));
  const int in11[] = {4, 2, 3, 1};
  c.expect(run(f11a, in11).total_swaps == 5, "fig11a (4,2,3,1) is the 5-swap input");

  const auto search = transforms::minimize_max_swaps(f11a);
  const auto r12 = engine::exhaustive_stats(search.network);
  const std::map<int, std::uint64_t> want12{{0, 1}, {1, 4}, {2, 8}, {3, 8}, {4, 3}};
  eq(c, "minimize_max_swaps(fig11a) = " + dsl::serialize(search.network) + ", histogram " + hist(r12.histogram),
     r12.histogram, want12, hist(want12));
  const std::vector<int> worst{3, 4, 1, 2};
  c.expect(std::find(r12.worst_inputs.begin(), r12.worst_inputs.end(), worst) != r12.worst_inputs.end(),
           "(3,4,1,2) attains max_swaps " + std::to_string(r12.max_swaps));
  eq(c, "last-link probability " + format_fraction(r12.slot_probs().back()), r12.slot_probs().back(), Rational(1, 3),
     "1/3");

  const auto rk = engine::exhaustive_stats(catalog::get("knuth44").network);
  eq(c, "knuth44 last-link probability " + format_fraction(rk.slot_probs().back()), rk.slot_probs().back(),
     Rational(2, 3), "2/3");
  eq(c, "knuth44 max_swaps " + std::to_string(rk.max_swaps), rk.max_swaps, 5, "5");

  const auto e11b = catalog::get("fig11b");
  const auto r11b = engine::exhaustive_stats(e11b.network);
  const auto want11b = rs({{1, 2}, {1, 3}, {1, 3}, {1, 4}, {1, 2}, {1, 4}});
  eq(c, "fig11b slots " + fracs(r11b.slot_probs()), r11b.slot_probs(), want11b, fracs(want11b));
  if (r11b.slot_probs() != want11b)
    c.note("fig11b: " + e11b.note + " (computed avg " + format_fraction(r11b.avg_swaps) + ")");
}

void c6(Criterion& c) {
  const auto t = engine::joint_swap_table(catalog::get("fig12").network, 2, 3);
  eq(c, "P(link 3) " + format_fraction(t.p_first()), t.p_first(), Rational(1, 2), "1/2");
  eq(c, "P(link 4) " + format_fraction(t.p_second()), t.p_second(), Rational(1, 2), "1/2");
  eq(c, "P(4 | 3) " + format_fraction(t.p_second_given_first()), t.p_second_given_first(), Rational(1, 3), "1/3");
}

void c7(Criterion& c) {
  const auto r = engine::exhaustive_stats(catalog::get("sort5-fig14").network);
  const auto want = rs({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 3}, {5, 12}, {2, 5}, {2, 5}, {3, 10}});
  eq(c, "sort5-fig14 probabilities " + fracs(r.slot_probs()), r.slot_probs(), want, fracs(want));
  eq(c, "avg_swaps " + format_fraction(r.avg_swaps), r.avg_swaps, Rational(47, 15), "47/15");
}

void c8(Criterion& c) {
  const auto n = catalog::get("sort6-fig15").network;
  c.expect(engine::verify_sorts(n), "sort6-fig15 sorts");
  const auto stages = schedule(n).stage_count();
  eq(c, "stages " + std::to_string(stages), stages, std::size_t{4}, "4");
  const auto r = transforms::minimize_max_swaps(decompose(n));
  eq(c, "minimize_max_swaps max_swaps " + std::to_string(r.max_swaps) + " (avg " + format_fraction(r.avg_swaps) + ")",
     r.max_swaps, 8, "8");
}

void c9(Criterion& c) {
  const auto b = engine::exhaustive_stats(catalog::batcher(8));
  eq(c, "batcher(8) links " + std::to_string(b.links), b.links, std::size_t{19}, "19");
  c.expect(std::abs(as_double(b.avg_swaps) - 10.65) <= batcher_tolerance,
           "batcher(8) avg " + format_fraction(b.avg_swaps) + " (" + format_decimal(b.avg_swaps) + ") ~ 10.65");
  eq(c, "batcher(8) max_swaps " + std::to_string(b.max_swaps), b.max_swaps, 19, "19");

  const auto n = dsl::parse("18-27-36-45-24=13=12=34=24=234=45-", 8);
  eq(c, "fig26 links " + std::to_string(n.link_count()), n.link_count(), std::size_t{19}, "19");
  const bool sorts = engine::verify_sorts(n);
  c.expect(sorts, "fig26 sorts");
  if (!sorts)
    c.note("sort8-fig26: " + catalog::get("sort8-fig26").note);
  const auto r = engine::exhaustive_stats(n);
  eq(c, "fig26 max_swaps " + std::to_string(r.max_swaps), r.max_swaps, 14, "14");
}

bool same_function(const Network& a, const Network& b) {
  std::vector<int> p(static_cast<std::size_t>(a.order()));
  std::iota(p.begin(), p.end(), 1);
  do {
    if (oracle::apply(oracle::from(a), p) != oracle::apply(oracle::from(b), p))
      return false;
  } while (std::next_permutation(p.begin(), p.end()));
  return true;
}

void c10(Criterion& c) {
  std::vector<catalog::CatalogEntry> entries;
  for (const auto& item : catalog::list())
    entries.push_back(catalog::get(item.name));

  {
    bool ok = true;
    int count = 0;
    for (const auto& e : entries) {
      const int n = e.network.order();
      if (n > 6)
        continue;
      ++count;
      const auto perm = oracle::permutation_stats(oracle::from(e.network), n);
      std::vector<int> settled;
      for (int w = 0; w < n; ++w)
        if (perm.settled[static_cast<std::size_t>(w)])
          settled.push_back(w + 1);
      const auto bin = oracle::binary_settled(oracle::from(e.network), n);
      ok = ok && bin == perm.settled && engine::verify_sorts(e.network) == perm.sorts &&
           engine::settled_positions(e.network) == settled;
    }
    c.expect(ok, "0-1 and permutation agreement (verify_sorts, settled_positions) on " + std::to_string(count) +
                     " catalog networks with N <= 6");
  }

  {
    bool ok = true;
    int count = 0;
    for (const auto& e : entries)
      if (e.network.order() <= 8) {
        ++count;
        ok = ok && same_function(e.network, transforms::fuse(e.network));
      }
    std::mt19937 rng(1);
    for (int k = 0; k < 100; ++k) {
      const auto n = oracle::random_network(rng, 3 + k % 6, 4 + k % 12);
      ok = ok && same_function(n, transforms::fuse(n));
    }
    c.expect(ok, "fuse preserves the function on all inputs (" + std::to_string(count) +
                     " catalog networks with N <= 8, 100 random)");
  }

  {
    bool involution = true;
    bool flip = true;
    bool sorted = true;
    int targets = 0;
    for (const auto& e : entries) {
      const Network n = decompose(e.network);
      const auto before = engine::exhaustive_stats(n);
      const bool sorts = engine::verify_sorts(n);
      for (std::size_t k = 0; k < n.size(); ++k) {
        if (!transforms::pre_exchange_admissible(n, k))
          continue;
        ++targets;
        const auto x = transforms::pre_exchange(n, k);
        involution = involution && transforms::pre_exchange(x, k) == n;
        flip = flip && engine::exhaustive_stats(x).slot_probs()[k] == Rational(1) - before.slot_probs()[k];
        sorted = sorted && engine::verify_sorts(x) == sorts;
      }
    }
    const std::string scope = " (" + std::to_string(targets) + " admissible targets over all catalog networks)";
    c.expect(involution, "pre_exchange is an involution" + scope);
    c.expect(flip, "pre_exchange flips the target probability p -> 1-p" + scope);
    c.expect(sorted, "pre_exchange preserves sortedness" + scope);
  }

  {
    bool ok = true;
    std::mt19937 rng(42);
    for (int n = 3; n <= 9; ++n)
      for (int k = 0; k < 1000; ++k) {
        const auto net = oracle::random_network(rng, n, 1 + k % 24, 0.25);
        ok = ok && dsl::parse(dsl::serialize(net), n) == net;
      }
    c.expect(ok, "dsl round trip on 1000 random networks per order 3..9");
  }

  {
    bool ok = true;
    for (const char* name : {"median9-old-mmm", "median9-new-full", "sort8-fig26", "fig11b"}) {
      const auto n = catalog::get(name).network;
      engine::Options one;
      engine::Options many;
      many.threads = 4;
      const auto a = engine::exhaustive_stats(n, one);
      const auto b = engine::exhaustive_stats(n, many);
      ok = ok && report::to_json(a).dump() == report::to_json(b).dump() &&
           report::to_json(a).dump() == report::to_json(engine::exhaustive_stats(n, one)).dump() &&
           render::render_svg(n, &a) == render::render_svg(n, &b) && render::render_svg(n) == render::render_svg(n);
    }
    c.expect(ok, "byte-identical JSON and SVG across repeated runs and thread counts 1/4");
  }
}

struct Entry {
  const char* title;
  std::function<void(Criterion&)> body;
};

const Entry criteria[] = {
    {"fig1a probabilities, average and worst case", c1},
    {"fig2a swap totals", c2},
    {"median9-old-mmm probabilities, average, stages, worst input", c3},
    {"median network summary table", c4},
    {"N=4 family", c5},
    {"conditional swap probability on fig12", c6},
    {"sort5-fig14 probabilities", c7},
    {"sort6-fig15 sorting, stages and worst-case search", c8},
    {"N=8 sorters", c9},
    {"property suites", c10},
};

} // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  constexpr int total = static_cast<int>(std::size(criteria));
  if (only < 0 || only > total) {
    std::cerr << "criterion must be in 1.." << total << '\n';
    return 2;
  }

  int failed = 0;
  for (int k = 1; k <= total; ++k) {
    if (only && k != only)
      continue;
    const auto& entry = criteria[k - 1];
    std::cout << "criterion " << k << ": " << entry.title << '\n';
    Criterion c;
    try {
      entry.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << k << ": " << entry.title << '\n';
    failed += !c.passed();
  }
  return failed ? 1 : 0;
}
