#include "homcount/graph.hpp"

#include <algorithm>
#include <set>

namespace homcount {

Graph::Graph(int n, const std::vector<Edge>& edge_pairs) : n_(n) {
    if (n < 0) throw InvalidOrderError("vertex count must be nonnegative");
    adj_.resize(static_cast<std::size_t>(n));
    std::set<Edge> seen;
    for (const auto& [a, b] : edge_pairs) {
        if (a < 0 || a >= n) throw VertexOutOfRangeError(a, n);
        if (b < 0 || b >= n) throw VertexOutOfRangeError(b, n);
        if (a == b) throw SelfLoopError(a);
        Edge e{std::min(a, b), std::max(a, b)};
        if (!seen.insert(e).second) throw DuplicateEdgeError(e.first, e.second);
    }
    edges_.assign(seen.begin(), seen.end());
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw VertexOutOfRangeError(v, n_);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_complete() const {
    const long long n = n_;
    return static_cast<long long>(edges_.size()) == n * (n - 1) / 2;
}

std::vector<DegreeInfo> degrees(const Graph& g) {
    std::vector<DegreeInfo> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) out.push_back({v, g.degree(v)});
    return out;
}

std::vector<Vertex> isolated_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out.push_back(v);
    return out;
}

Graph complete(int n) {
    if (n < 0) throw InvalidOrderError("vertex count must be nonnegative");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph path(int n) {
    if (n < 1) throw InvalidOrderError("path graph needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw InvalidOrderError("cycle graph needs at least three vertices");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph edgeless(int n) { return Graph(n, {}); }

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < g.order(); ++i)
        for (Vertex j = i + 1; j < g.order(); ++j)
            if (!g.adjacent(i, j)) edges.emplace_back(i, j);
    return Graph(g.order(), edges);
}

StrippedGraph strip_isolated(const Graph& g) {
    std::vector<Vertex> relabel(static_cast<std::size_t>(g.order()), -1);
    int kept = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) relabel[v] = kept++;
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) edges.emplace_back(relabel[u], relabel[v]);
    return {Graph(kept, edges), g.order() - kept};
}

Graph append_isolated(const Graph& g, int k) {
    if (k < 0) throw InvalidOrderError("cannot append a negative number of vertices");
    return Graph(g.order() + k, g.edges());
}

}  // namespace homcount
