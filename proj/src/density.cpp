#include "homcount/density.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace homcount {

Density::Density(Count numerator, Count denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ <= 0) throw Error("density denominator must be positive");
    if (num_ < 0) throw Error("density numerator must be nonnegative");
    if (num_ > den_) throw Error("density " + num_.str() + "/" + den_.str() + " exceeds 1");
    const Count g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

double Density::approx() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string_view to_string(Relation r) {
    switch (r) {
        case Relation::LE: return "<=";
        case Relation::GE: return ">=";
        case Relation::EQ: return "==";
    }
    return "?";
}

namespace {

void require_nonempty_codomain(const Graph& f) {
    if (f.order() == 0) throw EmptyCodomainError();
}

bool relation_holds(const Density& lhs, Relation rel, const Density& rhs) {
    switch (rel) {
        case Relation::LE: return lhs <= rhs;
        case Relation::GE: return lhs >= rhs;
        case Relation::EQ: return lhs == rhs;
    }
    return false;
}

BoundCheck make_check(Density lhs, Relation rel, Density rhs,
                      std::optional<VertexMapping> witness = std::nullopt) {
    const bool holds = relation_holds(lhs, rel, rhs);
    return {std::move(lhs), std::move(rhs), rel, holds, std::move(witness)};
}

}  // namespace

Density density(const Graph& g, const Graph& f, const EngineOptions& opts) {
    if (f.order() == 0 && g.order() > 0) throw EmptyCodomainError();
    return Density(count_homomorphisms(g, f, opts).first, count_mappings(g, f));
}

Density injective_density(const Graph& g, const Graph& f) {
    if (f.order() == 0 && g.order() > 0) throw EmptyCodomainError();
    return Density(count_injective(g, f), count_mappings(g, f));
}

BoundCheck check_edgeless_iff_one(const Graph& g, const Graph& f, const EngineOptions& opts) {
    require_nonempty_codomain(f);
    Density t = density(g, f, opts);
    if (g.is_edgeless()) return make_check(std::move(t), Relation::EQ, Density::one());

    // g has an edge, so collapsing everything onto one codomain vertex breaks
    // it; t = |H|/|M| with |H| < |M| is exactly t <= (|M|-1)/|M|.
    const Count mappings = count_mappings(g, f);
    VertexMapping collapse(static_cast<std::size_t>(g.order()), 0);
    return make_check(std::move(t), Relation::LE, Density(mappings - 1, mappings),
                      std::move(collapse));
}

BoundCheck check_complete_domain_bound(int n, const Graph& f, const EngineOptions& opts) {
    require_nonempty_codomain(f);
    const Graph k = complete(n);
    return make_check(density(k, f, opts), Relation::LE, injective_density(k, f));
}

BoundCheck check_complete_codomain_bound(const Graph& g, int m, const EngineOptions& opts) {
    const Graph k = complete(m);
    require_nonempty_codomain(k);
    return make_check(density(g, k, opts), Relation::GE, injective_density(g, k));
}

Density density_complete_complete(int n, int m) {
    if (m == 0 && n > 0) throw EmptyCodomainError();
    Count injective{1};
    Count mappings{1};
    for (int i = 0; i < n; ++i) {
        injective *= std::max(m - i, 0);
        mappings *= m;
    }
    return Density(std::move(injective), std::move(mappings));
}

BoundCheck check_isolated_invariance(const Graph& g, const Graph& f, const EngineOptions& opts) {
    require_nonempty_codomain(f);
    Density base = density(g, f, opts);
    Density extended = density(append_isolated(g), f, opts);
    return make_check(std::move(base), Relation::EQ, std::move(extended));
}

}  // namespace homcount
