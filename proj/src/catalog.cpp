#include "cen/catalog.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "cen/dsl.hpp"

namespace cen::catalog {
namespace {

using R = Rational;

std::vector<Element> links(std::string_view text, int order) { return dsl::parse(text, order).elements(); }

std::vector<Element> concat(std::initializer_list<std::vector<Element>> parts) {
  std::vector<Element> out;
  for (const auto& p : parts)
    out.insert(out.end(), p.begin(), p.end());
  return out;
}

using Triple = std::array<int, 3>;
constexpr std::array<Triple, 7> median_triples{{
    {1, 4, 7}, {2, 5, 8}, {3, 6, 9}, // columns
    {1, 2, 3}, {4, 5, 6}, {7, 8, 9}, // rows
    {3, 5, 7},                       // diagonal
}};

std::vector<Element> median_network(std::vector<Element> (*s3)(int, int, int)) {
  std::vector<Element> out;
  for (const auto& t : median_triples) {
    const auto part = s3(t[0], t[1], t[2]);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<R> repeat(std::initializer_list<R> pattern, int times) {
  std::vector<R> out;
  for (int k = 0; k < times; ++k)
    out.insert(out.end(), pattern.begin(), pattern.end());
  return out;
}

CatalogEntry entry(std::string name, int order, std::vector<Element> elements, std::string provenance,
                   Expected expected) {
  CatalogEntry e;
  e.network = Network(order, std::move(elements), name);
  e.name = std::move(name);
  e.provenance = std::move(provenance);
  e.expected = std::move(expected);
  return e;
}

CatalogEntry fig1a() {
  Expected x;
  x.links = 3;
  x.slot_probs = {R(1, 2), R(2, 3), R(1, 3)};
  x.avg_swaps = R(3, 2);
  x.max_swaps = 3;
  x.settled = {1, 2, 3};
  x.worst_input = {3, 2, 1};
  x.sorts = true;
  return entry("fig1a", 3, links("23-12-23-", 3), "Fig 1(a); trace table for Fig 1(a)", x);
}

CatalogEntry fig1b() {
  Expected x;
  x.links = 3;
  x.slot_probs = {R(1, 2), R(1, 3), R(2, 3)};
  x.avg_swaps = R(3, 2);
  x.max_swaps = 3;
  x.sorts = true;
  return entry("fig1b", 3, links("23-13-12-", 3), "Fig 1(b), odd-size even-odd construction", x);
}

CatalogEntry fig2a() {
  Expected x;
  x.links = 3;
  x.slot_probs = {R(1, 2), R(1, 3), R(1, 3)};
  x.avg_swaps = R(7, 6);
  x.max_swaps = 2;
  x.sorts = true;
  return entry("fig2a", 3, links("13-12-23-", 3), "Fig 2(a); trace table for Fig 2(a)", x);
}

CatalogEntry fig2b() {
  Expected x;
  x.links = 3;
  x.avg_swaps = R(7, 6);
  x.max_swaps = 2;
  x.sorts = true;
  return entry("fig2b", 3, links("13-23-12-", 3), "Fig 2(b), mirror image of Fig 2(a)", x);
}

CatalogEntry fig3() {
  Expected x;
  x.links = 3;
  x.avg_swaps = R(7, 6);
  x.max_swaps = 2;
  x.stages = 2;
  x.sorts = true;
  return entry("fig3", 3, {Element::link(1, 3), Element::fused2(1, 2, 3)}, "Fig 3, first 2-op", x);
}

CatalogEntry median9_old_mmm() {
  Expected x;
  x.links = 21;
  auto probs = repeat({R(1, 2), R(2, 3), R(1, 3)}, 6);
  probs.insert(probs.end(), {R(19, 70), R(5, 14), R(1, 7)});
  x.slot_probs = probs;
  x.avg_swaps = R(342, 35);
  x.max_swaps = 21;
  x.stages = 9;
  x.settled = {1, 5, 9};
  x.worst_input = {9, 8, 7, 6, 5, 4, 3, 2, 1};
  x.selects = {1, 5, 9};
  auto e = entry("median9-old-mmm", 9, median_network(s3_old), "Fig 5 and its rearranged layout; summary table", x);
  e.known_mismatches = {"worst_input"};
  e.note = "the reverse-sorted input 9..1 swaps 18 times; all 21 links swap on the 3x3 grid reversed in column "
           "order, e.g. 9,6,3,8,5,2,7,4,1 (wires read 1,4,7,2,5,8,3,6,9)";
  return e;
}

CatalogEntry median9_old_full() {
  Expected x;
  x.links = 25;
  x.avg_swaps_decimal = Decimal{11.56, 0.005};
  x.max_swaps = 25;
  x.stages = 11;
  x.sorts = true;
  auto e = entry("median9-old-full", 9,
                 concat({median_network(s3_old), links("24-34-68-67-", 9)}),
                 "Fig 8(a); summary table", x);
  e.known_mismatches = {"stages"};
  e.note = "greedy scheduling backfills (2,4),(6,8) into earlier stages: 10 stages, published layout shows 11";
  return e;
}

CatalogEntry median9_old_bare() {
  auto elements = median_network(s3_old);
  // The row sort s3(1,2,3) only has to deliver its maximum and s3(7,8,9)
  // its minimum: drop the closing (1,2) and the opening (7,8).
  elements.erase(elements.begin() + 15);
  elements.erase(elements.begin() + 11);
  Expected x;
  x.links = 19;
  x.avg_swaps_decimal = Decimal{9.105, 0.005};
  x.max_swaps = 19;
  x.stages = 9;
  x.selects = {5};
  return entry("median9-old-bare", 9, std::move(elements), "Fig 8(b); summary table", x);
}

CatalogEntry median9_new_mmm() {
  Expected x;
  x.links = 21;
  x.avg_swaps_decimal = Decimal{7.657, 0.005};
  x.max_swaps = 14;
  x.stages = 6;
  x.settled = {1, 5, 9};
  x.selects = {1, 5, 9};
  return entry("median9-new-mmm", 9, median_network(s3_new), "Fig 7; summary table", x);
}

CatalogEntry median9_new_full() {
  Expected x;
  x.links = 25;
  x.avg_swaps_decimal = Decimal{9.443, 0.005};
  x.max_swaps = 18;
  x.stages = 8;
  x.sorts = true;
  auto e = entry("median9-new-full", 9,
                 concat({median_network(s3_new), links("24-34-68-67-", 9)}),
                 "Fig 8+(a); summary table", x);
  e.known_mismatches = {"stages"};
  e.note = "greedy scheduling backfills (2,4),(6,8) into earlier stages: 7 stages, published layout shows 8";
  return e;
}

CatalogEntry median9_new_bare() {
  auto elements = median_network(s3_new);
  for (auto& e : elements) {
    if (e == Element::fused2(1, 2, 3))
      e = Element::link(2, 3);
    else if (e == Element::fused2(7, 8, 9))
      e = Element::link(7, 8);
  }
  Expected x;
  x.links = 19;
  x.avg_swaps_decimal = Decimal{6.99, 0.005};
  x.max_swaps = 13;
  x.stages = 6;
  x.selects = {5};
  return entry("median9-new-bare", 9, std::move(elements), "Fig 8+(b); summary table", x);
}

CatalogEntry fig10a() {
  Expected x;
  x.links = 5;
  x.sorts = false;
  x.selects = {1, 4};
  return entry("fig10a", 4, concat({links("13-24-", 4), {Element::fused3(1, 2, 3, 4)}}),
               "Fig 10(a), min/max with a 3-op", x);
}

CatalogEntry fig10b() {
  Expected x;
  x.links = 6;
  x.sorts = true;
  return entry("fig10b", 4, concat({links("13-24-", 4), {Element::fused3(1, 2, 3, 4), Element::link(2, 3)}}),
               "Fig 10(b)", x);
}

CatalogEntry fig11a() {
  Expected x;
  x.links = 5;
  x.slot_probs = {R(1, 2), R(1, 2), R(1, 2), R(1, 2), R(1, 3)};
  x.max_swaps = 5;
  x.histogram = std::map<int, std::uint64_t>{{0, 1}, {1, 5}, {2, 8}, {3, 6}, {4, 3}, {5, 1}};
  x.worst_input = {4, 2, 3, 1};
  x.sorts = true;
  return entry("fig11a", 4, links("13-24-12-34-23-", 4), "Fig 11(a); Fig 13 histogram", x);
}

CatalogEntry fig11b() {
  Expected x;
  x.links = 6;
  x.slot_probs = {R(1, 2), R(1, 3), R(1, 3), R(1, 4), R(1, 2), R(1, 4)};
  x.avg_swaps = R(2);
  x.stages = 3;
  x.sorts = true;
  auto e = entry("fig11b", 4, concat({links("14-13-24-", 4), {Element::fused3(1, 2, 3, 4)}}),
                 "Fig 11(b), all six pairs with a 3-op", x);
  e.known_mismatches = {"slot_probs"};
  e.note = "the 3-op centre slot swaps with probability 1/3, not 1/2; 1/3 is the value consistent with "
           "the published average of exactly 2";
  return e;
}

CatalogEntry fig12() {
  Expected x;
  x.links = 5;
  x.slot_probs = {R(1, 2), R(1, 2), R(1, 2), R(1, 2), R(1, 3)};
  x.max_swaps = 4;
  x.histogram = std::map<int, std::uint64_t>{{0, 1}, {1, 4}, {2, 8}, {3, 8}, {4, 3}};
  x.worst_input = {3, 4, 1, 2};
  x.sorts = true;
  // Frozen output of minimize_max_swaps(fig11a).
  return entry("fig12", 4, links("23-14-12-34-23-", 4), "Fig 12 / Fig 13 histogram", x);
}

CatalogEntry knuth44() {
  Expected x;
  x.links = 5;
  x.slot_probs = {R(1, 2), R(1, 2), R(1, 2), R(1, 2), R(2, 3)};
  x.max_swaps = 5;
  x.sorts = true;
  return entry("knuth44", 4, links("12-34-13-24-23-", 4), "Fig knuth44 (classic 5-link 4-sorter)", x);
}

CatalogEntry sort5_fig14() {
  Expected x;
  x.links = 9;
  x.slot_probs = {R(1, 2), R(1, 3), R(1, 4), R(1, 5), R(1, 3), R(5, 12), R(2, 5), R(2, 5), R(3, 10)};
  x.avg_swaps = R(47, 15);
  x.sorts = true;
  // Maximum driven to wire 5, then the Fig 11(a) sort on wires 1..4.
  return entry("sort5-fig14", 5, links("15-25-35-45-13-24-12-34-23-", 5), "Fig 14", x);
}

CatalogEntry sort6_fig15() {
  Expected x;
  x.links = 13;
  x.stages = 4;
  x.sorts = true;
  return entry("sort6-fig15", 6,
               concat({links("15-26-", 6),
                       {Element::fused2(1, 3, 5), Element::fused2(2, 4, 6), Element::fused2(1, 4, 5),
                        Element::fused2(2, 3, 6)},
                       links("12-34-56-", 6)}),
               "Fig 15 construction", x);
}

CatalogEntry sort8_fig26() {
  Expected x;
  x.links = 19;
  x.max_swaps = 14;
  x.sorts = true;
  auto e = entry("sort8-fig26", 8, dsl::parse("18-27-36-45-24=13=12=34=24=234=45-", 8).elements(),
                 "Fig 26; DSL usage example", x);
  e.known_mismatches = {"sorts"};
  e.note = "the published DSL string does not sort (e.g. 0,0,0,1,1,0,0,0 -> 0,0,0,1,0,0,0,1); "
           "replacing 34= by 35= gives a 19-link sorter with max 14";
  return e;
}

CatalogEntry sort8_fig26_fixed() {
  Expected x;
  x.links = 19;
  x.max_swaps = 14;
  x.sorts = true;
  return entry("sort8-fig26-fixed", 8, dsl::parse("18-27-36-45-24=13=12=35=24=234=45-", 8).elements(),
               "Fig 26 with 34= read as 35=", x);
}

CatalogEntry batcher_entry(int n) {
  Expected x;
  x.sorts = true;
  if (n == 2)
    x.links = 1;
  else if (n == 4)
    x.links = 5;
  else if (n == 8) {
    x.links = 19;
    x.avg_swaps_decimal = Decimal{10.65, 0.005};
    x.max_swaps = 19;
  }
  CatalogEntry e;
  e.name = n == 8 ? "batcher" : "batcher-" + std::to_string(n);
  e.network = batcher(n).renamed(e.name);
  e.provenance = "Fig 24 (odd-even mergesort generator)";
  e.expected = std::move(x);
  return e;
}

struct Builder {
  const char* name;
  CatalogEntry (*build)();
};

constexpr Builder builders[] = {
    {"fig1a", fig1a},
    {"fig1b", fig1b},
    {"fig2a", fig2a},
    {"fig2b", fig2b},
    {"fig3", fig3},
    {"median9-old-mmm", median9_old_mmm},
    {"median9-old-full", median9_old_full},
    {"median9-old-bare", median9_old_bare},
    {"median9-new-mmm", median9_new_mmm},
    {"median9-new-full", median9_new_full},
    {"median9-new-bare", median9_new_bare},
    {"fig10a", fig10a},
    {"fig10b", fig10b},
    {"fig11a", fig11a},
    {"fig11b", fig11b},
    {"fig12", fig12},
    {"knuth44", knuth44},
    {"sort5-fig14", sort5_fig14},
    {"sort6-fig15", sort6_fig15},
    {"sort8-fig26", sort8_fig26},
    {"sort8-fig26-fixed", sort8_fig26_fixed},
};

std::string summarize(const Expected& x) {
  std::ostringstream os;
  const char* sep = "";
  const auto field = [&](const std::string& s) {
    os << sep << s;
    sep = ", ";
  };
  if (x.links)
    field("links " + std::to_string(*x.links));
  if (x.avg_swaps)
    field("avg " + format_fraction(*x.avg_swaps));
  if (x.avg_swaps_decimal) {
    std::ostringstream d;
    d << "avg ~" << x.avg_swaps_decimal->value;
    field(d.str());
  }
  if (x.max_swaps)
    field("max " + std::to_string(*x.max_swaps));
  if (x.stages)
    field("stages " + std::to_string(*x.stages));
  if (x.sorts)
    field(*x.sorts ? "sorts" : "does not sort");
  return os.str();
}

template <class T>
std::string join(const std::vector<T>& v, std::function<std::string(const T&)> f) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? " " : "") + f(v[i]);
  return s + "]";
}

std::string ints(const std::vector<int>& v) {
  return join<int>(v, [](const int& k) { return std::to_string(k); });
}

std::string hist_text(const std::map<int, std::uint64_t>& h) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, c] : h) {
    s += (first ? "" : " ") + std::to_string(k) + ":" + std::to_string(c);
    first = false;
  }
  return s + "}";
}

} // namespace

std::vector<Element> s3_old(int a, int b, int c) {
  return {Element::link(a, b), Element::link(b, c), Element::link(a, b)};
}

std::vector<Element> s3_new(int a, int b, int c) { return {Element::link(a, c), Element::fused2(a, b, c)}; }

Network batcher(int n) {
  if (n < 1 || n > 16 || (n & (n - 1)) != 0)
    throw ContractViolation("batcher needs a power of two in 1..16, got " + std::to_string(n));
  std::vector<Element> out;
  for (int p = 1; p < n; p *= 2)
    for (int k = p; k >= 1; k /= 2)
      for (int j = k % p; j + k < n; j += 2 * k)
        for (int i = 0; i < k && i + j + k < n; ++i)
          if ((i + j) / (2 * p) == (i + j + k) / (2 * p))
            out.push_back(Element::link(i + j + 1, i + j + k + 1));
  return Network(n, std::move(out), "batcher-" + std::to_string(n));
}

std::vector<ListItem> list() {
  std::vector<ListItem> out;
  for (const auto& b : builders) {
    const auto e = b.build();
    out.push_back({e.name, e.provenance, summarize(e.expected), false});
  }
  const auto b = batcher_entry(8);
  out.push_back({b.name, b.provenance + "; batcher-<n> for other powers of two", summarize(b.expected), true});
  return out;
}

CatalogEntry get(std::string_view name) {
  for (const auto& b : builders)
    if (name == b.name)
      return b.build();
  if (name == "batcher")
    return batcher_entry(8);
  constexpr std::string_view prefix = "batcher-";
  if (name.substr(0, prefix.size()) == prefix) {
    const std::string digits(name.substr(prefix.size()));
    if (!digits.empty() && digits.size() <= 2 && digits.find_first_not_of("0123456789") == std::string::npos) {
      const int n = std::stoi(digits);
      if (n >= 1 && n <= 16 && (n & (n - 1)) == 0)
        return batcher_entry(n);
    }
  }
  throw std::out_of_range("unknown catalog entry '" + std::string(name) + "'");
}

std::vector<Mismatch> check(const CatalogEntry& entry, const engine::Options& options) {
  const Expected& x = entry.expected;
  const Network& net = entry.network;
  std::vector<Mismatch> out;
  const auto compare = [&](const std::string& field, const std::string& want, const std::string& got) {
    if (want != got)
      out.push_back({field, want, got});
  };

  if (x.links)
    compare("links", std::to_string(*x.links), std::to_string(net.link_count()));
  if (x.stages)
    compare("stages", std::to_string(*x.stages), std::to_string(schedule(net).stage_count()));
  if (x.sorts)
    compare("sorts", *x.sorts ? "true" : "false", engine::verify_sorts(net, options) ? "true" : "false");
  for (int p : x.selects)
    compare("selects " + std::to_string(p), "true", engine::verify_selection(net, p, p, options) ? "true" : "false");

  const bool needs_stats = x.avg_swaps || x.avg_swaps_decimal || x.max_swaps || x.slot_probs || x.histogram ||
                           x.settled || x.worst_input;
  if (!needs_stats)
    return out;
  const auto s = engine::exhaustive_stats(net, options);
  if (x.avg_swaps)
    compare("avg_swaps", to_string(*x.avg_swaps), to_string(s.avg_swaps));
  if (x.avg_swaps_decimal) {
    const double got = boost::rational_cast<double>(s.avg_swaps);
    if (std::fabs(got - x.avg_swaps_decimal->value) > x.avg_swaps_decimal->tolerance) {
      std::ostringstream want;
      want << x.avg_swaps_decimal->value << " +- " << x.avg_swaps_decimal->tolerance;
      out.push_back({"avg_swaps", want.str(), format_decimal(s.avg_swaps, 4)});
    }
  }
  if (x.max_swaps)
    compare("max_swaps", std::to_string(*x.max_swaps), std::to_string(s.max_swaps));
  if (x.slot_probs) {
    const auto fmt = [](const Rational& r) { return format_fraction(r); };
    compare("slot_probs", join<Rational>(*x.slot_probs, fmt), join<Rational>(s.slot_probs(), fmt));
  }
  if (x.histogram)
    compare("histogram", hist_text(*x.histogram), hist_text(s.histogram));
  if (x.settled)
    compare("settled", ints(*x.settled), ints(s.settled));
  if (x.worst_input) {
    const auto trace = run(net, *x.worst_input);
    compare("worst_input", ints(*x.worst_input) + " swaps " + std::to_string(s.max_swaps),
            ints(*x.worst_input) + " swaps " + std::to_string(trace.total_swaps));
  }
  return out;
}

} // namespace cen::catalog
