#include "homcount/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace homcount {

void validate(const CorpusSpec& spec) {
    if (spec.n_min < 0) throw InvalidOrderError("corpus n-min must be nonnegative");
    if (spec.n_max < spec.n_min) throw InvalidOrderError("corpus vertex range is empty");
}

GraphSampler::GraphSampler(const CorpusSpec& spec) : spec_(spec), rng_(spec.seed) {
    validate(spec_);
}

int GraphSampler::next_order() {
    const std::uint64_t span = static_cast<std::uint64_t>(spec_.n_max - spec_.n_min) + 1;
    return spec_.n_min + static_cast<int>(rng_() % span);
}

Graph GraphSampler::next_graph(int order) {
    const Count num = spec_.edge_probability.num();
    const Count den = spec_.edge_probability.den();
    const Count scale = Count{1} << 53;
    std::vector<Edge> edges;
    for (Vertex i = 0; i < order; ++i) {
        for (Vertex j = i + 1; j < order; ++j) {
            const std::uint64_t draw = rng_() >> 11;  // 53 uniform bits
            if (Count{draw} * den < num * scale) edges.emplace_back(i, j);
        }
    }
    return Graph(order, edges);
}

Density parse_probability(std::string_view text) {
    const auto all_digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        });
    };

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const std::string_view num = text.substr(0, slash);
        const std::string_view den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw Error("invalid probability \"" + std::string(text) + "\"");
        return Density(Count{std::string(num)}, Count{std::string(den)});
    }

    const auto dot = text.find('.');
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = dot == std::string_view::npos ? "" : text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
        throw Error("invalid probability \"" + std::string(text) + "\"");

    Count num = whole.empty() ? Count{0} : Count{std::string(whole)};
    Count den{1};
    for (char c : frac) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    return Density(std::move(num), std::move(den));
}

}  // namespace homcount
