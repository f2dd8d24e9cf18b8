#pragma once

#include "homcount/graph.hpp"
#include "homcount/hom_engine.hpp"

#include <vector>

namespace homcount::testsupport {

// All 2^C(n,2) labeled graphs on n vertices. Bit k of the mask selects the
// k-th pair (i,j), i < j, in lexicographic order.
std::vector<Graph> all_labeled_graphs(int n);

// Every order in [n_min, n_max], concatenated in increasing order.
std::vector<Graph> all_labeled_graphs_up_to(int n_min, int n_max);

// Proper colorings via the recursion P(G) = P(G-e) - P(G/e) on the first
// edge, bottoming out at colors^order on edgeless graphs. Deliberately
// memoless and structure-free so it shares nothing with the engine.
Count chromatic_colorings(const Graph& g, int colors);

}  // namespace homcount::testsupport
