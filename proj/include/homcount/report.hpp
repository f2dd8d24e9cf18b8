#pragma once

#include "homcount/density.hpp"
#include "homcount/hom_engine.hpp"

#include <chrono>
#include <string>

namespace homcount {

// Bundled result of one counting run, ready for table or JSON rendering.
struct CountReport {
    std::string domain_spec;
    std::string codomain_spec;
    Count mappings;
    Count injective;
    Count homomorphisms;
    Density density;
    FastPath fast_path = FastPath::None;
    std::chrono::duration<double> elapsed{0};
};

struct CountOptions {
    EngineOptions engine;
    bool force_naive = false;  // bypass the dispatched engine, use the oracle
};

CountReport make_count_report(const Graph& g, const Graph& f, std::string domain_spec,
                              std::string codomain_spec, const CountOptions& opts = {});

}  // namespace homcount
