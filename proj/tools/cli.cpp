#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cen/catalog.hpp"
#include "cen/dsl.hpp"
#include "cen/engine.hpp"
#include "cen/render.hpp"
#include "cen/report.hpp"
#include "cen/transforms.hpp"

namespace cen::cli {
namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Source {
  std::optional<std::string> dsl;
  std::optional<std::string> file;
  std::optional<std::string> catalog;
  int order = 0;
  unsigned threads = 1;
  std::string cost_weight;
};

void add_source(CLI::App* sub, Source& src) {
  sub->add_option("--dsl", src.dsl, "Network in DSL form");
  sub->add_option("--file", src.file, "Path to a .cen DSL file ('#' starts a comment)");
  sub->add_option("--catalog", src.catalog, "Catalog entry name");
  sub->add_option("--order", src.order, "Number of wires (required with --dsl/--file)");
  sub->add_option("--threads", src.threads, "Enumeration threads (0 = all cores)");
}

Rational parse_weight(const std::string& text) {
  try {
    const auto dot = text.find('.');
    if (dot == std::string::npos)
      return parse_rational(text);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 9 || frac.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument(text);
    std::int64_t den = 1;
    for (std::size_t k = 0; k < frac.size(); ++k)
      den *= 10;
    const std::string whole = text.substr(0, dot);
    const bool negative = !whole.empty() && whole[0] == '-';
    const Rational w = whole.empty() || whole == "-" ? Rational(0) : parse_rational(whole);
    const Rational f(std::stoll(frac), den);
    return negative ? w - f : w + f;
  } catch (const std::exception&) {
    throw UsageError("--cost-weight: '" + text + "' is not a number");
  }
}

engine::Options make_options(const Source& src) {
  engine::Options opts;
  opts.threads = src.threads;
  if (!src.cost_weight.empty())
    opts.cost_weight = parse_weight(src.cost_weight);
  if (const char* cap = std::getenv("CEN_MAX_ORDER"); cap && *cap) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (*end != '\0' || v < 1 || v > 16)
      throw UsageError(std::string("CEN_MAX_ORDER: '") + cap + "' is not an order in 1..16");
    opts.limits.max_permutation_order = static_cast<int>(v);
  }
  return opts;
}

std::string read_dsl_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("--file: cannot read '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  // Blank out comments so parse offsets still index the file.
  bool comment = false;
  for (char& c : text) {
    if (c == '\n')
      comment = false;
    else if (c == '#')
      comment = true;
    if (comment)
      c = ' ';
  }
  return text;
}

Network load(const Source& src) {
  const int given = src.dsl.has_value() + src.file.has_value() + src.catalog.has_value();
  if (given != 1)
    throw UsageError("exactly one of --dsl, --file or --catalog is required");
  if (src.catalog) {
    catalog::CatalogEntry entry = [&] {
      try {
        return catalog::get(*src.catalog);
      } catch (const std::out_of_range&) {
        throw UsageError("--catalog: unknown entry '" + *src.catalog + "' (see 'catalog list')");
      }
    }();
    if (src.order != 0 && src.order != entry.network.order())
      throw UsageError("--order " + std::to_string(src.order) + " conflicts with catalog entry '" + *src.catalog +
                       "' of order " + std::to_string(entry.network.order()));
    return entry.network;
  }
  const char* flag = src.dsl ? "--dsl" : "--file";
  if (src.order == 0)
    throw UsageError(std::string("--order is required with ") + flag);
  if (src.order < dsl::min_order || src.order > dsl::max_order)
    throw UsageError("--order must be in " + std::to_string(dsl::min_order) + ".." + std::to_string(dsl::max_order));
  const std::string text = src.dsl ? *src.dsl : read_dsl_file(*src.file);
  try {
    return dsl::parse(text, src.order);
  } catch (const ParseError& e) {
    throw SourceError(std::string(flag) + " " + (src.file ? *src.file + " " : "") + e.what());
  }
}

std::string summary(const Network& n, const engine::Options& opts) {
  std::ostringstream os;
  os << "links " << n.link_count() << ", stages " << schedule(n).stage_count();
  try {
    const auto s = engine::exhaustive_stats(n, opts);
    os << ", avg " << format_fraction(s.avg_swaps) << " (" << format_decimal(s.avg_swaps) << "), max "
       << s.max_swaps;
  } catch (const LimitExceeded& e) {
    os << " (statistics skipped: " << e.what() << ")";
  }
  return os.str();
}

int cmd_stats(const Source& src, bool json, std::ostream& out) {
  const auto opts = make_options(src);
  const auto report = engine::exhaustive_stats(load(src), opts);
  if (json)
    out << report::to_json(report).dump(2) << '\n';
  else
    out << report::to_text(report);
  return ok;
}

struct VerifyFlags {
  bool sort = false;
  bool median = false;
  std::vector<int> select;
};

int cmd_verify(const Source& src, const VerifyFlags& f, std::ostream& out) {
  const auto opts = make_options(src);
  const Network net = load(src);
  bool pass = true;
  const auto line = [&](const std::string& what, bool ok_) {
    out << what << ": " << (ok_ ? "PASS" : "FAIL") << '\n';
    pass = pass && ok_;
  };
  const bool any = f.sort || f.median || !f.select.empty();
  if (f.sort || !any)
    line("sort", engine::verify_sorts(net, opts));
  if (f.median) {
    if (net.order() % 2 == 0)
      throw UsageError("--median needs an odd order, got " + std::to_string(net.order()));
    const int m = (net.order() + 1) / 2;
    line("median at " + std::to_string(m), engine::verify_selection(net, m, m, opts));
  }
  if (!f.select.empty())
    line("rank " + std::to_string(f.select[0]) + " at " + std::to_string(f.select[1]),
         engine::verify_selection(net, f.select[0], f.select[1], opts));
  return pass ? ok : verification_failed;
}

struct RenderFlags {
  bool svg = false;
  bool stats = false;
  std::string output;
  std::size_t width = render::AsciiOptions{}.max_width;
};

int cmd_render(const Source& src, const RenderFlags& f, std::ostream& out) {
  const auto opts = make_options(src);
  const Network net = load(src);
  std::optional<engine::StatsReport> stats;
  if (f.stats)
    stats = engine::exhaustive_stats(net, opts);
  const auto* sp = stats ? &*stats : nullptr;
  std::string text;
  try {
    text = f.svg ? render::render_svg(net, sp) : render::render_ascii(net, sp, {f.width});
  } catch (const render::RenderError& e) {
    throw LimitExceeded(std::string("--width: ") + e.what(), static_cast<int>(f.width));
  }
  if (f.output.empty()) {
    out << text;
    return ok;
  }
  std::ofstream file(f.output, std::ios::binary);
  if (!(file << text))
    throw UsageError("-o: cannot write '" + f.output + "'");
  return ok;
}

struct TransformFlags {
  std::optional<std::size_t> pre_exchange;
  bool deoffend = false;
  bool fuse = false;
  bool decompose = false;
  bool min_max = false;
  std::size_t budget = 10000;
};

int cmd_transform(const Source& src, const TransformFlags& f, std::ostream& out) {
  const int picked = f.pre_exchange.has_value() + f.deoffend + f.fuse + f.decompose + f.min_max;
  if (picked != 1)
    throw UsageError("exactly one of --pre-exchange, --deoffend, --fuse, --decompose or --min-max-swaps is required");
  const auto opts = make_options(src);
  const Network before = load(src);
  Network after;
  std::string extra;
  if (f.pre_exchange) {
    if (*f.pre_exchange < 1 || *f.pre_exchange > before.size())
      throw UsageError("--pre-exchange: index " + std::to_string(*f.pre_exchange) + " outside 1.." +
                       std::to_string(before.size()));
    after = transforms::pre_exchange(before, *f.pre_exchange - 1);
  } else if (f.deoffend) {
    after = transforms::deoffend(before, opts);
  } else if (f.fuse) {
    after = transforms::fuse(before, opts);
  } else if (f.decompose) {
    after = decompose(before);
  } else {
    const auto r = transforms::minimize_max_swaps(decompose(before), f.budget, opts);
    after = r.network;
    extra = "search: " + std::to_string(r.explored) + " pre-exchanges tried" +
            (r.budget_exhausted ? ", budget exhausted" : "") + "\n";
  }
  out << dsl::serialize(after) << '\n';
  out << "before: " << summary(before, opts) << '\n';
  out << "after:  " << summary(after, opts) << '\n';
  out << extra;
  return ok;
}

int cmd_histogram(const Source& src, bool json, std::ostream& out) {
  const auto opts = make_options(src);
  const auto hist = engine::histogram(load(src), opts);
  if (json) {
    auto j = nlohmann::ordered_json::object();
    for (const auto& [k, c] : hist)
      j[std::to_string(k)] = c;
    out << j.dump(2) << '\n';
    return ok;
  }
  out << "swaps inputs\n";
  for (const auto& [k, c] : hist)
    out << std::setw(5) << k << ' ' << c << '\n';
  return ok;
}

int cmd_correlate(const Source& src, const std::vector<std::size_t>& links, std::ostream& out) {
  const auto opts = make_options(src);
  const Network net = load(src);
  for (std::size_t k : links)
    if (k < 1 || k > net.size())
      throw UsageError("--links: index " + std::to_string(k) + " outside 1.." + std::to_string(net.size()));
  const std::size_t i = links[0];
  const std::size_t j = links[1];
  const auto t = engine::joint_swap_table(net, i - 1, j - 1, opts);
  const std::string a = std::to_string(i);
  const std::string b = std::to_string(j);
  const auto cond = [](auto fn) {
    try {
      return format_fraction(fn());
    } catch (const ContractViolation&) {
      return std::string("undefined");
    }
  };
  out << "link " << a << ' ' << to_string(net[i - 1]) << " vs link " << b << ' ' << to_string(net[j - 1]) << " over "
      << t.total << " inputs\n";
  out << std::left << std::setw(12) << "" << std::setw(10) << (b + " idle") << (b + " swaps") << '\n';
  for (int x = 0; x < 2; ++x)
    out << std::setw(12) << (a + (x ? " swaps" : " idle")) << std::setw(10) << t.counts[x][0] << t.counts[x][1]
        << '\n';
  out << "P(" << a << " swaps) = " << format_fraction(t.p_first()) << '\n';
  out << "P(" << b << " swaps) = " << format_fraction(t.p_second()) << '\n';
  out << "P(" << b << " swaps | " << a << " swaps) = " << cond([&] { return t.p_second_given_first(); }) << '\n';
  out << "P(" << a << " swaps | " << b << " swaps) = " << cond([&] { return t.p_first_given_second(); }) << '\n';
  return ok;
}

int cmd_trace(const Source& src, std::ostream& out) {
  const auto opts = make_options(src);
  const Network net = load(src);
  if (net.order() > opts.limits.max_permutation_order)
    throw LimitExceeded("trace of order " + std::to_string(net.order()) + " refused",
                        opts.limits.max_permutation_order);
  std::vector<int> input(static_cast<std::size_t>(net.order()));
  for (int k = 0; k < net.order(); ++k)
    input[static_cast<std::size_t>(k)] = k + 1;
  std::vector<long long> totals(net.size() + 1, 0);
  const int in_w = net.order() * 2 + 2;

  out << std::left << std::setw(in_w) << "input";
  for (std::size_t e = 0; e < net.size(); ++e)
    out << std::setw(4) << (e + 1);
  out << "total\n";
  do {
    const auto tr = run(net, input);
    std::string shown;
    for (int v : input)
      shown += std::to_string(v) + ' ';
    out << std::setw(in_w) << shown;
    for (std::size_t e = 0; e < net.size(); ++e) {
      out << std::setw(4) << tr.per_element[e].swaps;
      totals[e] += tr.per_element[e].swaps;
    }
    totals.back() += tr.total_swaps;
    out << tr.total_swaps << '\n';
  } while (std::next_permutation(input.begin(), input.end()));
  out << std::setw(in_w) << "total";
  for (std::size_t e = 0; e < net.size(); ++e)
    out << std::setw(4) << totals[e];
  out << totals.back() << '\n';
  return ok;
}

int cmd_catalog_list(std::ostream& out) {
  std::size_t w = 0;
  const auto items = catalog::list();
  for (const auto& it : items)
    w = std::max(w, it.name.size());
  for (const auto& it : items)
    out << std::left << std::setw(static_cast<int>(w + 2)) << it.name << it.provenance
        << (it.summary.empty() ? "" : "; " + it.summary) << '\n';
  return ok;
}

catalog::CatalogEntry lookup(const std::string& name) {
  try {
    return catalog::get(name);
  } catch (const std::out_of_range&) {
    throw UsageError("catalog: unknown entry '" + name + "' (see 'catalog list')");
  }
}

int cmd_catalog_show(const std::string& name, std::ostream& out) {
  const auto e = lookup(name);
  out << "name: " << e.name << '\n';
  out << "order: " << e.network.order() << '\n';
  out << "elements: " << e.network.size() << " (" << e.network.link_count() << " links)\n";
  out << "dsl: " << dsl::serialize(e.network) << '\n';
  out << "provenance: " << e.provenance << '\n';
  for (const auto& it : catalog::list())
    if (it.name == e.name && !it.summary.empty())
      out << "published: " << it.summary << '\n';
  if (!e.known_mismatches.empty()) {
    out << "known mismatches:";
    for (const auto& m : e.known_mismatches)
      out << ' ' << m;
    out << '\n';
  }
  if (!e.note.empty())
    out << "note: " << e.note << '\n';
  return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Comparison-exchange network analysis"};
  app.name("cen");
  app.require_subcommand(1);

  Source src;
  bool json = false;
  VerifyFlags vf;
  RenderFlags rf;
  TransformFlags tf;
  std::vector<std::size_t> links;
  std::string cat_name;

  auto* stats = app.add_subcommand("stats", "Exact swap statistics over all permutation inputs");
  add_source(stats, src);
  stats->add_flag("--json", json, "JSON report");
  stats->add_option("--cost-weight", src.cost_weight, "Weight of a swap relative to a comparison (default 2)");

  auto* verify = app.add_subcommand("verify", "Check sorting or selection on all inputs");
  add_source(verify, src);
  verify->add_flag("--sort", vf.sort, "Network sorts (default check)");
  verify->add_flag("--median", vf.median, "Median lands on the middle wire");
  verify->add_option("--select", vf.select, "Rank K lands on wire P")->expected(2)->type_name("K P");

  auto* rend = app.add_subcommand("render", "ASCII or SVG diagram");
  add_source(rend, src);
  auto* ascii = rend->add_flag("--ascii", "ASCII diagram (default)");
  rend->add_flag("--svg", rf.svg, "SVG diagram")->excludes(ascii);
  rend->add_flag("--stats", rf.stats, "Annotate with swap probabilities");
  rend->add_option("-o", rf.output, "Output path");
  rend->add_option("--width", rf.width, "ASCII column limit");

  auto* trans = app.add_subcommand("transform", "Rewrite a network");
  add_source(trans, src);
  trans->add_option("--pre-exchange", tf.pre_exchange, "Pre-exchange at element IDX (1-based)");
  trans->add_flag("--deoffend", tf.deoffend, "Pre-exchange links more likely than not to swap");
  trans->add_flag("--fuse", tf.fuse, "Fuse non-interfering link pairs into 2-ops");
  trans->add_flag("--decompose", tf.decompose, "Split fused elements into links");
  trans->add_flag("--min-max-swaps", tf.min_max, "Search pre-exchanges of 1/2 links for a lower worst case");
  trans->add_option("--budget", tf.budget, "Pre-exchange applications the search may try");

  auto* hist = app.add_subcommand("histogram", "Distribution of total swaps");
  add_source(hist, src);
  hist->add_flag("--json", json, "JSON object");

  auto* corr = app.add_subcommand("correlate", "Joint swap table for two elements");
  add_source(corr, src);
  corr->add_option("--links", links, "Element indices I J (1-based)")->expected(2)->required()->type_name("I J");

  auto* trace = app.add_subcommand("trace", "Per-input swap table");
  add_source(trace, src);

  auto* cat = app.add_subcommand("catalog", "Reconstructed networks");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "All entries");
  auto* show = cat->add_subcommand("show", "Entry details");
  show->add_option("name", cat_name)->required();
  auto* exp = cat->add_subcommand("export", "Entry as DSL");
  exp->add_option("name", cat_name)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "cen: " << e.what() << '\n';
    return usage_error;
  }

  try {
    if (*stats)
      return cmd_stats(src, json, out);
    if (*verify)
      return cmd_verify(src, vf, out);
    if (*rend)
      return cmd_render(src, rf, out);
    if (*trans)
      return cmd_transform(src, tf, out);
    if (*hist)
      return cmd_histogram(src, json, out);
    if (*corr)
      return cmd_correlate(src, links, out);
    if (*trace)
      return cmd_trace(src, out);
    if (cat->got_subcommand("list"))
      return cmd_catalog_list(out);
    if (*show)
      return cmd_catalog_show(cat_name, out);
    out << dsl::serialize(lookup(cat_name).network) << '\n';
    return ok;
  } catch (const UsageError& e) {
    err << "cen: " << e.what() << '\n';
    return usage_error;
  } catch (const SourceError& e) {
    err << "cen: " << e.what() << '\n';
    return parse_error;
  } catch (const ParseError& e) {
    err << "cen: " << e.what() << '\n';
    return parse_error;
  } catch (const LimitExceeded& e) {
    err << "cen: " << e.what() << '\n';
    return limit_exceeded;
  } catch (const ContractViolation& e) {
    err << "cen: " << e.what() << '\n';
    return parse_error;
  }
}

} // namespace cen::cli
