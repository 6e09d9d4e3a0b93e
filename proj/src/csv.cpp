#include "tbc/csv.hpp"

#include <charconv>
#include <fmt/format.h>
#include <fstream>
#include <map>
#include <stdexcept>

#include "tbc/errors.hpp"

namespace tbc {

std::string format_value(double x) { return fmt::format("{:.12g}", x); }

std::string bvt_csv(const TemporalGraph& g, const BetweennessResult& r) {
  std::string out = "node,time,value\n";
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    for (Time t = 0; t <= g.horizon(); ++t) {
      out += fmt::format("{},{},{}\n", g.label(v), t, format_value(r.b_vt.at(v, t)));
    }
  }
  return out;
}

std::string bv_csv(const TemporalGraph& g, const BetweennessResult& r) { return node_values_csv(g, r.b_v); }

std::string bt_csv(const BetweennessResult& r) {
  std::string out = "time,value\n";
  for (std::size_t t = 0; t < r.b_t.size(); ++t) out += fmt::format("{},{}\n", t, format_value(r.b_t[t]));
  return out;
}

std::string node_values_csv(const TemporalGraph& g, const std::vector<double>& values) {
  std::string out = "node,value\n";
  for (NodeId v = 0; v < g.num_nodes(); ++v) out += fmt::format("{},{}\n", g.label(v), format_value(values[v]));
  return out;
}

std::string prefix_csv(const std::vector<PrefixPoint>& points) {
  std::string out = "mu,intersection\n";
  for (const auto& p : points) out += fmt::format("{},{}\n", format_value(p.mu), p.intersection);
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

void write_result_files(const TemporalGraph& g, const BetweennessResult& r, const std::string& prefix) {
  if (r.has_table) write_text_file(prefix + ".bvt.csv", bvt_csv(g, r));
  write_text_file(prefix + ".bv.csv", bv_csv(g, r));
  write_text_file(prefix + ".bt.csv", bt_csv(r));
}

std::vector<std::pair<std::string, double>> read_value_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::vector<std::pair<std::string, double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1 || line.empty()) continue;
    const auto comma = line.rfind(',');
    if (comma == std::string::npos) throw ParseError(lineno, "expected key,value");
    const std::string key = line.substr(0, comma);
    const std::string text = line.substr(comma + 1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) throw ParseError(lineno, "bad value '" + text + "'");
    rows.emplace_back(key, value);
  }
  return rows;
}

std::pair<Ranking, Ranking> rankings_from_csv(const std::vector<std::pair<std::string, double>>& a,
                                              const std::vector<std::pair<std::string, double>>& b) {
  std::map<std::string, std::uint32_t> ids;
  std::vector<double> va, vb(a.size(), 0.0);
  for (const auto& [key, value] : a) {
    if (!ids.emplace(key, static_cast<std::uint32_t>(va.size())).second) throw ArgumentError("duplicate key " + key);
    va.push_back(value);
  }
  if (b.size() != a.size()) throw ArgumentError("inputs have different key sets");
  std::vector<char> seen(a.size(), 0);
  for (const auto& [key, value] : b) {
    auto it = ids.find(key);
    if (it == ids.end() || seen[it->second]) throw ArgumentError("inputs have different key sets");
    seen[it->second] = 1;
    vb[it->second] = value;
  }
  return {make_ranking(va), make_ranking(vb)};
}

}  // namespace tbc
