#include "homcount/hom_engine.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace homcount {

namespace {

std::atomic<long long> g_count_bias{0};

Count integer_pow(int base, long long exp) {
    Count result{1};
    for (long long i = 0; i < exp; ++i) result *= base;
    return result;
}

Count factorial(int n) {
    Count result{1};
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

std::vector<char> adjacency_matrix(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.order());
    std::vector<char> adj(n * n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
        adj[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
    }
    return adj;
}

// Static search order: descending degree, ties by smallest label. For each
// depth, the earlier depths holding a neighbor of that depth's vertex.
struct SearchPlan {
    std::vector<Vertex> order;
    std::vector<std::vector<int>> earlier_neighbors;
};

SearchPlan make_plan(const Graph& g) {
    SearchPlan plan;
    plan.order.resize(static_cast<std::size_t>(g.order()));
    std::iota(plan.order.begin(), plan.order.end(), 0);
    std::sort(plan.order.begin(), plan.order.end(), [&](Vertex a, Vertex b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<int> depth_of(static_cast<std::size_t>(g.order()));
    for (int d = 0; d < g.order(); ++d) depth_of[plan.order[d]] = d;
    plan.earlier_neighbors.resize(plan.order.size());
    for (int d = 0; d < g.order(); ++d) {
        for (Vertex w : g.neighbors(plan.order[d]))
            if (depth_of[w] < d) plan.earlier_neighbors[d].push_back(depth_of[w]);
        std::sort(plan.earlier_neighbors[d].begin(), plan.earlier_neighbors[d].end());
    }
    return plan;
}

Count backtrack(const SearchPlan& plan, const std::vector<char>& fadj, int m, int depth,
                std::vector<Vertex>& image, std::uint64_t& nodes, std::uint64_t& prunes) {
    if (depth == static_cast<int>(plan.order.size())) return Count{1};
    Count total{0};
    for (Vertex c = 0; c < m; ++c) {
        ++nodes;
        bool feasible = true;
        for (int earlier : plan.earlier_neighbors[depth]) {
            if (!fadj[static_cast<std::size_t>(image[earlier]) * m + c]) {
                feasible = false;
                break;
            }
        }
        if (!feasible) {
            ++prunes;
            continue;
        }
        image[depth] = c;
        total += backtrack(plan, fadj, m, depth + 1, image, nodes, prunes);
    }
    return total;
}

Count backtrack_count(const Graph& g, const Graph& f, int threads, SearchStats& stats) {
    const SearchPlan plan = make_plan(g);
    const auto fadj = adjacency_matrix(f);
    const int m = f.order();
    const int n = g.order();

    threads = std::clamp(threads, 1, std::max(1, m));
    if (threads == 1 || m == 0) {
        std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
        return backtrack(plan, fadj, m, 0, image, stats.nodes_expanded, stats.prunes);
    }

    // Partition the first vertex's image round-robin; the sum and the node and
    // prune totals do not depend on the partitioning.
    std::vector<Count> partial(static_cast<std::size_t>(threads));
    std::vector<std::uint64_t> nodes(static_cast<std::size_t>(threads), 0);
    std::vector<std::uint64_t> prunes(static_cast<std::size_t>(threads), 0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
            Count local{0};
            for (Vertex c = t; c < m; c += threads) {
                ++nodes[t];
                image[0] = c;  // depth 0 has no earlier neighbors
                local += backtrack(plan, fadj, m, 1, image, nodes[t], prunes[t]);
            }
            partial[t] = std::move(local);
        });
    }
    for (auto& worker : pool) worker.join();

    Count total{0};
    for (int t = 0; t < threads; ++t) {
        total += partial[t];
        stats.nodes_expanded += nodes[t];
        stats.prunes += prunes[t];
    }
    return total;
}

void validate_mapping_shape(const Graph& g, const Graph& f, const VertexMapping& m) {
    if (m.size() != static_cast<std::size_t>(g.order()))
        throw MappingArityError(m.size(), static_cast<std::size_t>(g.order()));
    for (Vertex image : m)
        if (image < 0 || image >= f.order()) throw ImageOutOfRangeError(image, f.order());
}

void check_budget(const Count& required, std::uint64_t budget) {
    if (required > budget) throw BudgetExceededError(required.str(), budget);
}

// Odometer over all |V(f)|^|V(g)| mappings; fn(mapping, is_hom) -> continue?
template <typename Fn>
void enumerate_mappings(const Graph& g, const Graph& f, std::uint64_t budget, Fn&& fn) {
    check_budget(count_mappings(g, f), budget);
    const int n = g.order();
    const int m = f.order();
    if (m == 0) {
        if (n == 0) fn(VertexMapping{}, true);
        return;
    }
    const auto fadj = adjacency_matrix(f);
    const auto& edges = g.edges();
    VertexMapping a(static_cast<std::size_t>(n), 0);
    while (true) {
        bool hom = true;
        for (const auto& [u, v] : edges) {
            if (!fadj[static_cast<std::size_t>(a[u]) * m + a[v]]) {
                hom = false;
                break;
            }
        }
        if (!fn(a, hom)) return;
        int i = n - 1;
        while (i >= 0 && a[i] == m - 1) a[i--] = 0;
        if (i < 0) return;
        ++a[i];
    }
}

}  // namespace

std::string_view to_string(FastPath p) {
    switch (p) {
        case FastPath::None: return "none";
        case FastPath::EdgelessDomain: return "edgeless_domain";
        case FastPath::StrippedIsolated: return "stripped_isolated";
        case FastPath::CompleteDomain: return "complete_domain";
        case FastPath::CompleteCodomain: return "complete_codomain";
    }
    return "?";
}

bool is_homomorphism(const Graph& g, const Graph& f, const VertexMapping& m) {
    validate_mapping_shape(g, f, m);
    for (const auto& [u, v] : g.edges())
        if (!f.adjacent(m[u], m[v])) return false;
    return true;
}

Count count_mappings(const Graph& g, const Graph& f) {
    return integer_pow(f.order(), g.order());
}

Count count_injective(const Graph& g, const Graph& f) {
    Count result{1};
    for (int i = 0; i < g.order(); ++i) {
        const int factor = f.order() - i;
        if (factor <= 0) return Count{0};
        result *= factor;
    }
    return result;
}

Count count_homomorphisms_naive(const Graph& g, const Graph& f, const EngineOptions& opts) {
    std::uint64_t homs = 0;
    enumerate_mappings(g, f, opts.naive_budget, [&](const VertexMapping&, bool hom) {
        if (hom) ++homs;
        return true;
    });
    return Count{homs};
}

std::pair<Count, SearchStats> count_homomorphisms(const Graph& g, const Graph& f,
                                                  const EngineOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    SearchStats stats;

    const auto [core, removed] = strip_isolated(g);
    const Count multiplier = integer_pow(f.order(), removed);

    Count result;
    if (core.order() == 0) {
        // An edgeless domain strips to nothing; every mapping is a homomorphism.
        result = multiplier;
        stats.fast_path = FastPath::EdgelessDomain;
    } else if (core.is_complete()) {
        result = multiplier * count_ordered_cliques(f, core.order());
        stats.fast_path = FastPath::CompleteDomain;
    } else if (f.is_complete()) {
        result = multiplier * count_proper_colorings(core, f.order());
        stats.fast_path = FastPath::CompleteCodomain;
    } else {
        result = multiplier * backtrack_count(core, f, opts.threads, stats);
        stats.fast_path = removed > 0 ? FastPath::StrippedIsolated : FastPath::None;
    }

    if (const long long bias = g_count_bias.load(); bias != 0) {
        result += bias;
        if (result < 0) result = 0;
    }

    stats.elapsed = std::chrono::steady_clock::now() - start;
    return {std::move(result), stats};
}

Count count_ordered_cliques(const Graph& f, int size) {
    if (size < 0) throw InvalidOrderError("clique size must be nonnegative");
    if (size == 0) return Count{1};
    if (size > f.order()) return Count{0};

    const int m = f.order();
    const auto fadj = adjacency_matrix(f);
    Count cliques{0};
    std::vector<Vertex> current;
    current.reserve(static_cast<std::size_t>(size));

    auto extend = [&](auto&& self, Vertex from) -> void {
        if (static_cast<int>(current.size()) == size) {
            ++cliques;
            return;
        }
        for (Vertex v = from; v < m; ++v) {
            bool joined = true;
            for (Vertex u : current) {
                if (!fadj[static_cast<std::size_t>(u) * m + v]) {
                    joined = false;
                    break;
                }
            }
            if (!joined) continue;
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    return cliques * factorial(size);
}

Count count_proper_colorings(const Graph& g, int colors) {
    if (colors < 0) throw InvalidOrderError("color count must be nonnegative");
    const SearchPlan plan = make_plan(g);
    const int n = g.order();
    std::vector<int> assigned(static_cast<std::size_t>(n), -1);

    auto color = [&](auto&& self, int depth) -> Count {
        if (depth == n) return Count{1};
        Count total{0};
        for (int c = 0; c < colors; ++c) {
            bool clash = false;
            for (int earlier : plan.earlier_neighbors[depth]) {
                if (assigned[earlier] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            assigned[depth] = c;
            total += self(self, depth + 1);
        }
        return total;
    };
    return color(color, 0);
}

void for_each_homomorphism(const Graph& g, const Graph& f,
                           const std::function<bool(const VertexMapping&)>& visit,
                           const EngineOptions& opts) {
    enumerate_mappings(g, f, opts.naive_budget, [&](const VertexMapping& m, bool hom) {
        return hom ? visit(m) : true;
    });
}

void for_each_injective_mapping(const Graph& g, const Graph& f,
                                const std::function<bool(const VertexMapping&)>& visit,
                                const EngineOptions& opts) {
    check_budget(count_injective(g, f), opts.naive_budget);
    const int n = g.order();
    const int m = f.order();
    if (n > m) return;

    VertexMapping image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    auto descend = [&](auto&& self, int depth) -> bool {
        if (depth == n) return visit(image);
        for (Vertex c = 0; c < m; ++c) {
            if (used[c]) continue;
            used[c] = 1;
            image[depth] = c;
            const bool keep_going = self(self, depth + 1);
            used[c] = 0;
            if (!keep_going) return false;
        }
        return true;
    };
    descend(descend, 0);
}

namespace testing {

void inject_count_bias(long long delta) { g_count_bias.store(delta); }

long long injected_count_bias() { return g_count_bias.load(); }

}  // namespace testing

}  // namespace homcount
