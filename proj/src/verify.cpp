#include "homcount/verify.hpp"

#include <algorithm>
#include <set>

namespace homcount {

namespace {

struct SuiteInfo {
    std::string selector;
    std::string description;
};

const std::vector<SuiteInfo>& suite_table() {
    static const std::vector<SuiteInfo> table = {
        {"thm2.1", "t(G,F) = 1 exactly when G has no edges"},
        {"lem2.2", "every homomorphism out of a complete graph is injective"},
        {"lem2.3", "every injective mapping into a complete graph is a homomorphism"},
        {"thm2.4", "t(K_n, F) <= |I|/|M|"},
        {"thm2.5", "t(G, K_n) >= |I|/|M|"},
        {"cor2.5.1", "t(K_n, K_m) = |I|/|M|; closed form matches the search engine"},
        {"thm2.6", "appending an isolated vertex preserves t and scales |H| by |V(F)|"},
    };
    return table;
}

std::string describe(const BoundCheck& check) {
    return "lhs " + check.lhs.str() + " " + std::string(to_string(check.relation)) + " rhs " +
           check.rhs.str();
}

bool has_repeated_image(const VertexMapping& m) {
    std::set<Vertex> seen;
    for (Vertex v : m)
        if (!seen.insert(v).second) return true;
    return false;
}

}  // namespace

const std::vector<std::string>& all_suite_selectors() {
    static const std::vector<std::string> selectors = [] {
        std::vector<std::string> out;
        for (const auto& info : suite_table()) out.push_back(info.selector);
        return out;
    }();
    return selectors;
}

bool is_suite_selector(const std::string& selector) {
    const auto& all = all_suite_selectors();
    return std::find(all.begin(), all.end(), selector) != all.end();
}

std::string_view suite_description(const std::string& selector) {
    for (const auto& info : suite_table())
        if (info.selector == selector) return info.description;
    return "";
}

SuiteResult run_suite(const std::string& selector, const CorpusSpec& spec,
                      const EngineOptions& opts) {
    if (!is_suite_selector(selector)) throw Error("unknown suite selector \"" + selector + "\"");
    validate(spec);
    if (spec.n_min < 1)
        throw InvalidOrderError("verification corpus needs n-min >= 1: the checks require a "
                                "nonempty codomain");

    GraphSampler sampler(spec);
    SuiteResult result;
    result.selector = selector;

    const auto violation = [&](Graph g, Graph f, std::optional<VertexMapping> mapping,
                               std::string detail) {
        result.violations.push_back(
            {std::move(g), std::move(f), std::move(mapping), std::move(detail)});
    };

    // A check that blows up instead of reporting is itself a failed property.
    const auto guarded = [&](const Graph& g, const Graph& f, const auto& body) {
        ++result.checks;
        try {
            body();
        } catch (const BudgetExceededError&) {
            throw;
        } catch (const Error& e) {
            violation(g, f, std::nullopt, std::string("check threw: ") + e.what());
        }
    };

    if (selector == "cor2.5.1") {
        // Exhaustive over the vertex range rather than sampled.
        for (int n = 1; n <= spec.n_max; ++n) {
            for (int m = 1; m <= spec.n_max; ++m) {
                const Graph kn = complete(n);
                const Graph km = complete(m);
                guarded(kn, km, [&] {
                    const Density closed = density_complete_complete(n, m);
                    const Density engine = density(kn, km, opts);
                    if (closed != engine)
                        violation(kn, km, std::nullopt,
                                  "closed form " + closed.str() + " != engine " + engine.str());
                });
            }
        }
        return result;
    }

    for (std::uint64_t s = 0; s < spec.samples; ++s) {
        if (selector == "thm2.1") {
            const Graph g = sampler.next_graph();
            const Graph f = sampler.next_graph();
            guarded(g, f, [&] {
                const BoundCheck check = check_edgeless_iff_one(g, f, opts);
                if (!check.holds) violation(g, f, check.witness, describe(check));
            });
        } else if (selector == "lem2.2") {
            const int n = sampler.next_order();
            const Graph kn = complete(n);
            const Graph f = sampler.next_graph();
            guarded(kn, f, [&] {
                for_each_homomorphism(kn, f, [&](const VertexMapping& m) {
                    if (has_repeated_image(m)) {
                        violation(kn, f, m, "homomorphism out of a complete graph repeats an image");
                        return false;
                    }
                    return true;
                }, opts);
            });
        } else if (selector == "lem2.3") {
            const Graph g = sampler.next_graph();
            const Graph km = complete(sampler.next_order());
            guarded(g, km, [&] {
                for_each_injective_mapping(g, km, [&](const VertexMapping& m) {
                    if (!is_homomorphism(g, km, m)) {
                        violation(g, km, m,
                                  "injective mapping into a complete graph is not a homomorphism");
                        return false;
                    }
                    return true;
                }, opts);
            });
        } else if (selector == "thm2.4") {
            const int n = sampler.next_order();
            const Graph f = sampler.next_graph();
            guarded(complete(n), f, [&] {
                const BoundCheck check = check_complete_domain_bound(n, f, opts);
                if (!check.holds) violation(complete(n), f, check.witness, describe(check));
            });
        } else if (selector == "thm2.5") {
            const Graph g = sampler.next_graph();
            const int m = sampler.next_order();
            guarded(g, complete(m), [&] {
                const BoundCheck check = check_complete_codomain_bound(g, m, opts);
                if (!check.holds) violation(g, complete(m), check.witness, describe(check));
            });
        } else if (selector == "thm2.6") {
            const Graph g = sampler.next_graph();
            const Graph f = sampler.next_graph();
            guarded(g, f, [&] {
                const BoundCheck check = check_isolated_invariance(g, f, opts);
                if (!check.holds) violation(g, f, check.witness, describe(check));
                const Count base = count_homomorphisms(g, f, opts).first;
                const Count extended = count_homomorphisms(append_isolated(g), f, opts).first;
                const Count scaled = base * f.order();
                if (extended != scaled)
                    violation(g, f, std::nullopt,
                              "hom(g+v,f) = " + extended.str() + " but |V(f)|*hom(g,f) = " +
                                  scaled.str());
            });
        }
    }
    return result;
}

}  // namespace homcount
