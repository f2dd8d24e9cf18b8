#pragma once

#include "homcount/density.hpp"
#include "homcount/graph.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace homcount {

// Reproducible random-graph corpus. The sampling scheme is fixed so corpora
// can be regenerated elsewhere: a single mt19937_64 stream seeded with `seed`;
// an order draw takes one output word w and yields n_min + w % (n_max-n_min+1);
// each candidate pair (i,j), i < j, in lexicographic order takes one word w
// and includes the edge iff (w >> 11) * den < num * 2^53, where num/den is the
// edge probability.
struct CorpusSpec {
    int n_min = 1;
    int n_max = 5;
    Density edge_probability = Density(1, 2);
    std::uint64_t samples = 200;
    std::uint64_t seed = 42;
};

void validate(const CorpusSpec& spec);

class GraphSampler {
public:
    explicit GraphSampler(const CorpusSpec& spec);

    int next_order();
    Graph next_graph(int order);
    Graph next_graph() { return next_graph(next_order()); }

private:
    CorpusSpec spec_;
    std::mt19937_64 rng_;
};

// Accepts "p/q" or a decimal like "0.25"; the value must land in [0, 1].
Density parse_probability(std::string_view text);

}  // namespace homcount
