#include "homcount/report.hpp"

namespace homcount {

CountReport make_count_report(const Graph& g, const Graph& f, std::string domain_spec,
                              std::string codomain_spec, const CountOptions& opts) {
    if (f.order() == 0 && g.order() > 0) throw EmptyCodomainError();

    CountReport report;
    report.domain_spec = std::move(domain_spec);
    report.codomain_spec = std::move(codomain_spec);
    report.mappings = count_mappings(g, f);
    report.injective = count_injective(g, f);

    if (opts.force_naive) {
        const auto start = std::chrono::steady_clock::now();
        report.homomorphisms = count_homomorphisms_naive(g, f, opts.engine);
        report.elapsed = std::chrono::steady_clock::now() - start;
        report.fast_path = FastPath::None;
    } else {
        auto [homs, stats] = count_homomorphisms(g, f, opts.engine);
        report.homomorphisms = std::move(homs);
        report.fast_path = stats.fast_path;
        report.elapsed = stats.elapsed;
    }

    report.density = Density(report.homomorphisms, report.mappings);
    return report;
}

}  // namespace homcount
