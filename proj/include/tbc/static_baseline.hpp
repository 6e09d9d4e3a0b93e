#pragma once

#include <vector>

#include "tbc/temporal_graph.hpp"

namespace tbc {

// Unnormalised directed betweenness (Brandes, unit weights).
std::vector<double> brandes_static(const StaticGraph& g);

// O(n^3) reference: all-pairs distances and path counts, then the pair sum.
std::vector<double> floyd_warshall_betweenness(const StaticGraph& g);

}  // namespace tbc
