#pragma once

#include "homcount/graph.hpp"
#include "homcount/hom_engine.hpp"

#include <compare>
#include <optional>
#include <string>

namespace homcount {

// Exact reduced rational in [0, 1]. Canonical: coprime terms, positive
// denominator, so memberwise equality is value equality.
class Density {
public:
    Density() = default;  // 0/1
    Density(Count numerator, Count denominator);

    static Density zero() { return {}; }
    static Density one() { return Density(1, 1); }

    const Count& num() const { return num_; }
    const Count& den() const { return den_; }

    std::string str() const { return num_.str() + "/" + den_.str(); }
    double approx() const;

    friend bool operator==(const Density& a, const Density& b) = default;
    friend std::strong_ordering operator<=>(const Density& a, const Density& b) {
        const Count left = a.num_ * b.den_;
        const Count right = b.num_ * a.den_;
        if (left < right) return std::strong_ordering::less;
        if (left > right) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Count num_{0};
    Count den_{1};
};

enum class Relation { LE, GE, EQ };

std::string_view to_string(Relation r);

// One executable inequality or equality with both sides computed through
// independent routes wherever the statement allows it.
struct BoundCheck {
    Density lhs;
    Density rhs;
    Relation relation;
    bool holds;
    std::optional<VertexMapping> witness;  // a violating mapping, when one exists
};

// t(g,f) = |H| / |M| as an exact reduced rational. The empty domain gives 1
// (the unique empty mapping is vacuously a homomorphism); an empty codomain
// with a nonempty domain throws EmptyCodomainError.
Density density(const Graph& g, const Graph& f, const EngineOptions& opts = {});

// |I| / |M| reduced; same domain conventions as density.
Density injective_density(const Graph& g, const Graph& f);

// t(g,f) = 1 exactly when g has no edges. For an edgeless domain the check is
// t == 1; otherwise t < 1, expressed exactly as t <= (|M|-1)/|M|, and the
// witness collapses an edge onto a single codomain vertex.
BoundCheck check_edgeless_iff_one(const Graph& g, const Graph& f, const EngineOptions& opts = {});

// t(complete(n), f) <= |I|/|M|; left side via search, right side closed form.
BoundCheck check_complete_domain_bound(int n, const Graph& f, const EngineOptions& opts = {});

// t(g, complete(m)) >= |I|/|M|; left side via search, right side closed form.
BoundCheck check_complete_codomain_bound(const Graph& g, int m, const EngineOptions& opts = {});

// Closed form for a complete domain and codomain: falling factorial over m^n.
Density density_complete_complete(int n, int m);

// Appending one isolated vertex to the domain leaves the density unchanged.
BoundCheck check_isolated_invariance(const Graph& g, const Graph& f,
                                     const EngineOptions& opts = {});

}  // namespace homcount
