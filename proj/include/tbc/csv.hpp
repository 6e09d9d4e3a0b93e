#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tbc/analysis.hpp"
#include "tbc/betweenness.hpp"
#include "tbc/temporal_graph.hpp"

namespace tbc {

// 12 significant digits.
std::string format_value(double x);

std::string bvt_csv(const TemporalGraph& g, const BetweennessResult& r);
std::string bv_csv(const TemporalGraph& g, const BetweennessResult& r);
std::string bt_csv(const BetweennessResult& r);
std::string node_values_csv(const TemporalGraph& g, const std::vector<double>& values);
std::string prefix_csv(const std::vector<PrefixPoint>& points);

// Writes P.bvt.csv (unless marginals only), P.bv.csv and P.bt.csv.
void write_result_files(const TemporalGraph& g, const BetweennessResult& r, const std::string& prefix);
void write_text_file(const std::string& path, const std::string& text);

// Reads a two-column "key,value" CSV with a header row.
std::vector<std::pair<std::string, double>> read_value_csv(const std::string& path);

// Rankings over the keys of `a`; `b` must have the same key set.
std::pair<Ranking, Ranking> rankings_from_csv(const std::vector<std::pair<std::string, double>>& a,
                                              const std::vector<std::pair<std::string, double>>& b);

}  // namespace tbc
