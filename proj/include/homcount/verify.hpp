#pragma once

#include "homcount/corpus.hpp"
#include "homcount/density.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homcount {

// The built-in property suites, keyed by the selector the CLI accepts:
//   thm2.1    t(G,F) = 1 exactly when G has no edges
//   lem2.2    every homomorphism out of a complete graph is injective
//   lem2.3    every injective mapping into a complete graph is a homomorphism
//   thm2.4    t(K_n, F) <= |I|/|M|
//   thm2.5    t(G, K_n) >= |I|/|M|
//   cor2.5.1  t(K_n, K_m) = |I|/|M|; closed form matches the search engine
//   thm2.6    appending an isolated vertex preserves t and scales |H| by |V(F)|
const std::vector<std::string>& all_suite_selectors();
bool is_suite_selector(const std::string& selector);
std::string_view suite_description(const std::string& selector);

struct SuiteViolation {
    Graph domain;
    Graph codomain;
    std::optional<VertexMapping> mapping;
    std::string detail;
};

struct SuiteResult {
    std::string selector;
    std::uint64_t checks = 0;
    std::vector<SuiteViolation> violations;
    bool passed() const { return violations.empty(); }
};

// Runs one suite over a fresh sampler seeded from the spec, so suites are
// independent and reproducible. Every pair draws the domain first, then the
// codomain (or clique order) from the same stream. A check that throws
// anything but BudgetExceededError is recorded as a violation.
SuiteResult run_suite(const std::string& selector, const CorpusSpec& spec,
                      const EngineOptions& opts = {});

}  // namespace homcount
