#pragma once

#include "homcount/errors.hpp"
#include "homcount/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <string_view>
#include <utility>
#include <vector>

namespace homcount {

// Exact unbounded counts. |M| = |V(F)|^|V(G)| overflows 64 bits at modest
// sizes (6^25 already does), and densities must reduce exactly.
using Count = boost::multiprecision::cpp_int;

// Total assignment: entry i is the image of domain vertex i.
using VertexMapping = std::vector<Vertex>;

// Which terminal algorithm produced a dispatched count:
//   EdgelessDomain    nothing left after stripping isolated vertices
//   CompleteDomain    ordered-clique count on the codomain
//   CompleteCodomain  proper-coloring count on the domain
//   StrippedIsolated  isolated vertices removed, remainder backtracked
//   None              plain pruned backtracking
enum class FastPath { None, EdgelessDomain, StrippedIsolated, CompleteDomain, CompleteCodomain };

std::string_view to_string(FastPath p);

struct SearchStats {
    std::uint64_t nodes_expanded = 0;  // candidate images tried
    std::uint64_t prunes = 0;          // candidates rejected by an adjacency constraint
    FastPath fast_path = FastPath::None;
    std::chrono::duration<double> elapsed{0};
};

struct EngineOptions {
    int threads = 1;
    std::uint64_t naive_budget = 100'000'000;  // max mappings the exhaustive counter enumerates
};

// True iff every edge {u,v} of g has {m[u],m[v]} an edge of f. A collapsed
// edge (m[u] == m[v]) fails because f has no self-loops.
bool is_homomorphism(const Graph& g, const Graph& f, const VertexMapping& m);

Count count_mappings(const Graph& g, const Graph& f);   // |V(f)|^|V(g)|, 0^0 = 1
Count count_injective(const Graph& g, const Graph& f);  // falling factorial

// Exhaustive oracle: enumerates every mapping and tests it. Independent of
// the dispatched engine; refuses inputs beyond options.naive_budget mappings.
Count count_homomorphisms_naive(const Graph& g, const Graph& f, const EngineOptions& opts = {});

// Exact |H| via dispatch: (1) strip isolated domain vertices and carry a
// |V(f)|^k multiplier, (2) empty remainder -> multiplier, (3) complete domain
// -> ordered cliques, (4) complete codomain -> proper colorings, (5) pruned
// backtracking over domain vertices in descending-degree order (ties by
// smallest index), rejecting a candidate image as soon as an already-assigned
// neighbor's image is not adjacent to it.
std::pair<Count, SearchStats> count_homomorphisms(const Graph& g, const Graph& f,
                                                  const EngineOptions& opts = {});

// Injective maps of an n-set into f with pairwise-adjacent images; equals the
// homomorphism count out of a complete domain of that size.
Count count_ordered_cliques(const Graph& f, int size);

// Proper colorings of g with the given palette size; equals the homomorphism
// count into a complete codomain of that order.
Count count_proper_colorings(const Graph& g, int colors);

// Enumeration helpers for the property suites; both honor the naive budget.
// The callback returns false to stop early.
void for_each_homomorphism(const Graph& g, const Graph& f,
                           const std::function<bool(const VertexMapping&)>& visit,
                           const EngineOptions& opts = {});
void for_each_injective_mapping(const Graph& g, const Graph& f,
                                const std::function<bool(const VertexMapping&)>& visit,
                                const EngineOptions& opts = {});

namespace testing {
// Self-test hook: biases every dispatched homomorphism count so the
// verification suites can demonstrate they catch a broken engine. Zero
// restores normal behavior. Never enabled outside tests and `verify
// --inject-bug`.
void inject_count_bias(long long delta);
long long injected_count_bias();
}  // namespace testing

}  // namespace homcount
