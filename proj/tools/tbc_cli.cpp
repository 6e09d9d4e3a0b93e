// tbc: temporal betweenness from the command line.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <iostream>
#include <sstream>

#include "tbc/analysis.hpp"
#include "tbc/betweenness.hpp"
#include "tbc/csv.hpp"
#include "tbc/errors.hpp"
#include "tbc/oracle.hpp"
#include "tbc/static_baseline.hpp"

using namespace tbc;

namespace {

enum Exit { kOk = 0, kArgument = 2, kInput = 3, kInternal = 4 };

struct InputOptions {
  std::string path;
  bool directed = false;
  bool compress_times = false;
};

struct VariantOptions {
  std::string variant;
  std::string walk_type = "passive";
  bool strict = false;
  std::optional<std::uint32_t> k;
  std::optional<double> k_fraction;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.path, "edge list, one 'u v t' per line")->required();
  cmd->add_flag("--directed", in.directed, "read arcs as directed (default: each line in both directions)");
  cmd->add_flag("--compress-times", in.compress_times, "remap distinct times to 1..D");
}

void add_variant(CLI::App* cmd, VariantOptions& v) {
  cmd->add_option("--variant", v.variant)->required()->check(CLI::IsMember({"shortest", "restless", "foremost"}));
  cmd->add_option("--walk-type", v.walk_type)->check(CLI::IsMember({"active", "passive"}));
  cmd->add_flag("--strict", v.strict, "strictly increasing transition times");
  auto* k = cmd->add_option("--k", v.k, "restless waiting bound")->check(CLI::PositiveNumber);
  auto* f = cmd->add_option("--k-fraction", v.k_fraction, "restless bound as a fraction of T (rounded up)")
                ->check(CLI::Range(0.0, 1.0));
  k->excludes(f);
}

TemporalGraph load(const InputOptions& in) {
  return read_edge_list_file(in.path, {.directed = in.directed, .compress_times = in.compress_times});
}

VariantConfig make_config(const VariantOptions& v, Time horizon) {
  const auto type = v.walk_type == "active" ? WalkType::kActive : WalkType::kPassive;
  if (v.variant != "restless" && (v.k || v.k_fraction)) throw ArgumentError("--k applies to --variant restless only");
  if (v.variant == "foremost") {
    if (type == WalkType::kActive) throw ArgumentError("active foremost is not supported");
    return VariantConfig::foremost(v.strict);
  }
  if (v.variant == "shortest") return VariantConfig::shortest(type, v.strict);
  std::uint32_t k = default_restless_k(horizon);
  if (v.k) k = *v.k;
  if (v.k_fraction) k = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::ceil(*v.k_fraction * horizon - 1e-9)));
  return VariantConfig::restless(k, type, v.strict);
}

template <typename F>
int guarded(F&& body) {
  try {
    body();
    return kOk;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kArgument;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const OverflowError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}

std::vector<double> parse_mus(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ArgumentError("bad --mus entry '" + item + "'");
    }
  }
  if (out.empty()) throw ArgumentError("--mus is empty");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal betweenness centrality"};
  app.require_subcommand(1);

  InputOptions in;
  VariantOptions var;
  unsigned threads = 0;
  std::string out, out_prefix, file_a, file_b;
  std::size_t top = 10, bins = 0;
  bool normalize = false, marginals_only = false;
  std::string mus = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0";

  auto* compute = app.add_subcommand("compute", "B(v,t), B(v), B(t) as CSV");
  add_input(compute, in);
  add_variant(compute, var);
  compute->add_flag("--normalize", normalize, "divide by (n-1)(n-2)");
  compute->add_flag("--marginals-only", marginals_only, "skip the B(v,t) table");
  compute->add_option("--bins", bins, "also write P.hist.csv with B(t) in this many bins");
  compute->add_option("--threads", threads, "worker threads (0 = auto)");
  compute->add_option("--out-prefix", out_prefix)->required();

  auto* stat = app.add_subcommand("static", "Brandes betweenness of the aggregated digraph");
  add_input(stat, in);
  stat->add_option("--out", out)->required();

  auto* compare = app.add_subcommand("compare", "Kendall tau-b and top-k overlap of two node,value CSVs");
  compare->add_option("--a", file_a)->required();
  compare->add_option("--b", file_b)->required();
  auto* top_opt = compare->add_option("--top", top, "default: min(10, number of keys)");

  auto* scan = app.add_subcommand("prefix-scan", "top-k overlap of B(v) on prefix graphs against the full graph");
  add_input(scan, in);
  add_variant(scan, var);
  scan->add_option("--mus", mus, "comma-separated values in [0,1]");
  scan->add_option("--top", top);
  scan->add_option("--threads", threads, "worker threads (0 = auto)");
  scan->add_option("--out", out)->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force B(v,t) for small graphs");
  add_input(oracle, in);
  add_variant(oracle, var);
  oracle->add_option("--out-prefix", out_prefix)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kArgument;
  }

  return guarded([&] {
    if (*compute) {
      const auto g = load(in);
      const auto cfg = make_config(var, g.horizon());
      const auto r = compute_betweenness(g, cfg, {threads, marginals_only, normalize});
      write_result_files(g, r, out_prefix);
      if (bins > 0) {
        std::string text = "bin_lo,bin_hi,mass\n";
        for (const auto& b : time_histogram(r, bins)) {
          text += fmt::format("{},{},{}\n", format_value(b.lo), format_value(b.hi), format_value(b.mass));
        }
        write_text_file(out_prefix + ".hist.csv", text);
      }
    } else if (*stat) {
      const auto g = load(in);
      write_text_file(out, node_values_csv(g, brandes_static(aggregate_static(g))));
    } else if (*compare) {
      const auto [a, b] = rankings_from_csv(read_value_csv(file_a), read_value_csv(file_b));
      const std::size_t k = top_opt->count() ? top : std::min<std::size_t>(10, a.size());
      const double tau = kendall_tau(a, b);
      const auto overlap = top_k_intersection(a, b, k);
      fmt::print("tau={}\ntopk={}\n", format_value(tau), overlap);
    } else if (*scan) {
      const auto g = load(in);
      const auto cfg = make_config(var, g.horizon());
      const auto points = prefix_scan(g, cfg, parse_mus(mus), top, {.threads = threads});
      write_text_file(out, prefix_csv(points));
    } else if (*oracle) {
      const auto g = load(in);
      const auto cfg = make_config(var, g.horizon());
      write_result_files(g, oracle_betweenness(g, cfg), out_prefix);
    }
  });
}
