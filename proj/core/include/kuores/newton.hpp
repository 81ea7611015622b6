#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kuores/bipoly.hpp"
#include "kuores/poly.hpp"

namespace kuores {

// Newton polygon of h = sum c_j(X) T^j: support points (j, ord_X c_j) and
// their lower convex hull, both with j strictly increasing.
struct NewtonPolygon {
    std::vector<std::pair<int, int>> support;
    std::vector<std::pair<int, int>> vertices;
};

struct IrreducibilityVerdict {
    enum class Kind { Irreducible, Inconclusive };
    Kind kind;
    std::string reason;

    bool irreducible() const { return kind == Kind::Irreducible; }
};

template <class K>
NewtonPolygon newton_polygon(const BiPoly<K>& h) {
    if (h.is_zero())
        throw UndefinedOperation("newton polygon of the zero polynomial");
    NewtonPolygon np;
    for (int j = 0; j <= h.degree(); ++j) {
        const Poly<K>& c = h[static_cast<size_t>(j)];
        if (!c.is_zero()) np.support.emplace_back(j, low_order(c));
    }
    // Andrew monotone chain, lower hull only; collinear middle points are
    // dropped so vertices are exactly the polygon's corners.
    auto cross = [](std::pair<int, int> o, std::pair<int, int> a, std::pair<int, int> b) {
        return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
               static_cast<long long>(a.second - o.second) * (b.first - o.first);
    };
    for (const auto& pt : np.support) {
        auto& v = np.vertices;
        while (v.size() >= 2 && cross(v[v.size() - 2], v[v.size() - 1], pt) <= 0) v.pop_back();
        v.push_back(pt);
    }
    return np;
}

// Eisenstein-Dumas criterion, one-sided: Irreducible when the polygon is a
// single edge from (0, m) to (n, 0) with m >= 1 and gcd(n, m) = 1; otherwise
// Inconclusive (never "reducible").
template <class K>
IrreducibilityVerdict dumas_irreducible(const BiPoly<K>& h) {
    if (h.is_zero() || h.degree() < 1)
        throw DegenerateInput("criterion requires deg_T >= 1");
    if (!h.is_monic())
        throw NonMonicInput("criterion requires an input monic in the outer variable");

    const int n = h.degree();
    NewtonPolygon np = newton_polygon(h);
    if (np.vertices.size() != 2)
        return {IrreducibilityVerdict::Kind::Inconclusive,
                "newton polygon has " + std::to_string(np.vertices.size() - 1) +
                    " edges, need exactly one"};
    auto [j0, m] = np.vertices.front();
    if (j0 != 0)
        return {IrreducibilityVerdict::Kind::Inconclusive,
                "constant term vanishes (polygon starts at j = " + std::to_string(j0) + ")"};
    if (m < 1)
        return {IrreducibilityVerdict::Kind::Inconclusive, "polygon edge is horizontal (m = 0)"};
    const int g = std::gcd(n, m);
    if (g != 1)
        return {IrreducibilityVerdict::Kind::Inconclusive,
                "gcd(" + std::to_string(n) + ", " + std::to_string(m) + ") = " +
                    std::to_string(g)};
    return {IrreducibilityVerdict::Kind::Irreducible,
            "single edge (0, " + std::to_string(m) + ")-(" + std::to_string(n) +
                ", 0), gcd(" + std::to_string(n) + ", " + std::to_string(m) + ") = 1"};
}

// Sum of the monomials c X^i T^j minimizing the weight a*i + b*j.
template <class K>
BiPoly<K> weighted_initial_part(const BiPoly<K>& h, long a, long b) {
    if (h.is_zero())
        throw UndefinedOperation("initial part of the zero polynomial");
    if (a <= 0 || b <= 0)
        throw UndefinedOperation("weights must be positive");

    long long best = 0;
    bool have = false;
    for (int j = 0; j <= h.degree(); ++j) {
        const Poly<K>& c = h[static_cast<size_t>(j)];
        for (int i = 0; i <= c.degree(); ++i) {
            if (c[static_cast<size_t>(i)].is_zero()) continue;
            long long w = static_cast<long long>(a) * i + static_cast<long long>(b) * j;
            if (!have || w < best) {
                best = w;
                have = true;
            }
        }
    }
    std::vector<Poly<K>> out;
    for (int j = 0; j <= h.degree(); ++j) {
        const Poly<K>& c = h[static_cast<size_t>(j)];
        std::vector<K> keep;
        for (int i = 0; i <= c.degree(); ++i) {
            const K& cc = c[static_cast<size_t>(i)];
            bool hit = !cc.is_zero() &&
                       static_cast<long long>(a) * i + static_cast<long long>(b) * j == best;
            keep.push_back(hit ? cc : cc.zero_like());
        }
        out.push_back(Poly<K>(c.var(), std::move(keep)));
    }
    return BiPoly<K>(h.var(), std::move(out));
}

template <class K>
struct SeriesPrimePower {
    BiPoly<K> base;   // monic in the outer variable
    int exponent;
};

// Prime-power structure over k[[X]]: s = h / gcd(h, dh/dT); succeeds when
// h = s^e exactly and s is certified (Dumas, or linear in T). Any exactness
// failure degrades to "no answer" rather than an error.
template <class K>
std::optional<SeriesPrimePower<K>> prime_power_over_series(const BiPoly<K>& h) {
    if (h.is_zero() || h.degree() < 1)
        throw DegenerateInput("prime power detection requires deg_T >= 1");
    if (!h.is_monic())
        throw NonMonicInput("prime power detection requires an input monic in T");

    try {
        BiPoly<K> dh = derivative(h);
        if (dh.is_zero()) return std::nullopt;
        BiPoly<K> g = gcd_bipoly(h, dh);
        BiPoly<K> s = g.degree() == 0 ? h : exact_div(h, g);
        if (s.degree() < 1 || !s.is_monic()) return std::nullopt;
        if (h.degree() % s.degree() != 0) return std::nullopt;
        const int e = h.degree() / s.degree();
        if (!(pow_poly(s, static_cast<uint64_t>(e)) == h)) return std::nullopt;
        if (s.degree() == 1 || dumas_irreducible(s).irreducible())
            return SeriesPrimePower<K>{s, e};
        return std::nullopt;
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace kuores
