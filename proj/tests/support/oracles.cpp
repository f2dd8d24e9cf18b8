#include "oracles.hpp"

#include <set>

namespace homcount::testsupport {

std::vector<Graph> all_labeled_graphs(int n) {
    std::vector<Edge> pairs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<Graph> graphs;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    graphs.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1) edges.push_back(pairs[k]);
        graphs.emplace_back(n, edges);
    }
    return graphs;
}

std::vector<Graph> all_labeled_graphs_up_to(int n_min, int n_max) {
    std::vector<Graph> graphs;
    for (int n = n_min; n <= n_max; ++n) {
        auto batch = all_labeled_graphs(n);
        graphs.insert(graphs.end(), batch.begin(), batch.end());
    }
    return graphs;
}

Count chromatic_colorings(const Graph& g, int colors) {
    if (g.is_edgeless()) {
        Count result{1};
        for (int i = 0; i < g.order(); ++i) result *= colors;
        return result;
    }

    const auto [x, y] = g.edges().front();  // x < y
    const std::vector<Edge> rest(g.edges().begin() + 1, g.edges().end());
    const Count deleted = chromatic_colorings(Graph(g.order(), rest), colors);

    // Contract y into x; parallel edges collapse via the set, and no self-loop
    // can appear because a simple graph has no second x-y edge.
    std::set<Edge> merged;
    for (auto [u, v] : rest) {
        if (u == y) u = x;
        if (v == y) v = x;
        if (u > y) --u;
        if (v > y) --v;
        merged.insert({std::min(u, v), std::max(u, v)});
    }
    const Count contracted =
        chromatic_colorings(Graph(g.order() - 1, {merged.begin(), merged.end()}), colors);

    return deleted - contracted;
}

}  // namespace homcount::testsupport
