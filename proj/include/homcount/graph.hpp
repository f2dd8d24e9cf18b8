#pragma once

#include "homcount/errors.hpp"

#include <utility>
#include <vector>

namespace homcount {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored normalized with first < second

// Finite simple undirected graph on vertices 0..n-1. Immutable after
// construction; adjacency lists are derived from the edge set, so the two
// cannot drift apart.
class Graph {
public:
    Graph() = default;  // the empty graph
    Graph(int n, const std::vector<Edge>& edge_pairs);

    int order() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Sorted lexicographically, each pair with first < second.
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;

    bool is_edgeless() const { return edges_.empty(); }
    bool is_complete() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;

    void check_vertex(Vertex v) const;
};

struct DegreeInfo {
    Vertex vertex;
    int degree;  // 0 identifies an isolated vertex
};

std::vector<DegreeInfo> degrees(const Graph& g);
std::vector<Vertex> isolated_vertices(const Graph& g);

// Named families with canonical labelings.
Graph complete(int n);
Graph path(int n);   // edges {i, i+1}; n >= 1
Graph cycle(int n);  // edges {i, (i+1) mod n}; n >= 3
Graph edgeless(int n);

Graph complement(const Graph& g);

struct StrippedGraph {
    Graph graph;  // no isolated vertices; survivors relabeled 0.. preserving order
    int removed;  // number of degree-0 vertices dropped
};

StrippedGraph strip_isolated(const Graph& g);

// Same edge set, k extra isolated vertices appended after the existing labels.
Graph append_isolated(const Graph& g, int k = 1);

}  // namespace homcount
