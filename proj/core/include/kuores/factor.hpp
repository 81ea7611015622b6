#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "kuores/numeric.hpp"
#include "kuores/poly.hpp"
#include "kuores/rng.hpp"

namespace kuores {

// Generic over the coefficient field E, which must provide the hooks
// characteristic(E) -> uint64, field_card(E) -> BigInt (= p^d),
// pth_root(E) -> E, random_element(E, Rng&) -> E and cmp(E, E) -> int
// in addition to field arithmetic. Both Fp and FqElem qualify.

template <class E>
struct FactorPower {
    Poly<E> base;       // monic irreducible
    int multiplicity;
};

template <class E>
struct Factorization {
    E unit;
    std::vector<FactorPower<E>> factors;
};

template <class E>
struct PrimePower {
    Poly<E> base;       // monic irreducible
    int exponent;
};

namespace detail {

template <class E>
Poly<E> var_mono(Var v, const E& like) {
    return Poly<E>::monomial(v, like.one_like(), 1);
}

// base^e mod m by square-and-multiply in the residue ring; m monic.
template <class E>
Poly<E> pow_mod_poly(Poly<E> base, BigInt e, const Poly<E>& m) {
    base = divrem(base, m).second;
    Poly<E> acc = Poly<E>::constant(m.var(), m.lc().one_like());
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return acc;
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = divrem(acc * base, m).second;
        if (i + 1 < bits) base = divrem(base * base, m).second;
    }
    return acc;
}

// Coefficientwise p-th root of a polynomial whose derivative vanishes,
// i.e. a(Y) = c(Y^p); returns c.
template <class E>
Poly<E> pth_root_poly(const Poly<E>& a) {
    const uint64_t p = characteristic(a.lc());
    std::vector<E> cs;
    cs.reserve(a.size() / p + 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (i % p == 0) {
            cs.push_back(pth_root(a[i]));
        } else if (!a[i].is_zero()) {
            throw Error("internal: p-th root of a polynomial that is not in F[Y^p]");
        }
    }
    return Poly<E>(a.var(), std::move(cs));
}

} // namespace detail

// Squarefree decomposition, complete in characteristic p: when the
// derivative vanishes the input is C(Y^p) and the algorithm recurses on the
// p-th root of C, multiplying multiplicities by p.
template <class E>
std::vector<std::pair<Poly<E>, int>> squarefree_decomposition(const Poly<E>& a) {
    if (a.is_zero() || a.degree() < 1)
        throw DegenerateInput("squarefree decomposition requires deg >= 1");
    if (!a.is_monic())
        throw NonMonicInput("squarefree decomposition requires a monic input");

    const uint64_t p = characteristic(a.lc());
    std::vector<std::pair<Poly<E>, int>> out;
    auto absorb = [&](const Poly<E>& c, int scale_mult) {
        for (auto& [b, m] : squarefree_decomposition(c)) out.emplace_back(b, m * scale_mult);
    };

    Poly<E> da = derivative(a);
    if (da.is_zero()) {
        absorb(detail::pth_root_poly(a), static_cast<int>(p));
        return out;
    }

    Poly<E> w = gcd_monic(a, da);
    Poly<E> g = exact_div(a, w);
    int i = 1;
    while (g.degree() > 0) {
        Poly<E> y = gcd_monic(g, w);
        Poly<E> z = exact_div(g, y);
        if (z.degree() > 0) out.emplace_back(z, i);
        g = y;
        w = exact_div(w, y);
        ++i;
    }
    if (w.degree() > 0) absorb(detail::pth_root_poly(w), static_cast<int>(p));
    return out;
}

// Distinct-degree splitting of a squarefree monic polynomial: returns
// (d, product of all irreducible factors of degree d), ascending in d.
template <class E>
std::vector<std::pair<int, Poly<E>>> distinct_degree_split(const Poly<E>& squarefree) {
    const BigInt q = field_card(squarefree.lc());
    const Poly<E> x = detail::var_mono(squarefree.var(), squarefree.lc());
    std::vector<std::pair<int, Poly<E>>> out;
    Poly<E> v = squarefree;
    Poly<E> h = divrem(x, v).second;
    int i = 0;
    while (v.degree() >= 2 * (i + 1)) {
        ++i;
        h = detail::pow_mod_poly(h, q, v);
        Poly<E> g = gcd_monic(h - divrem(x, v).second, v);
        if (g.degree() > 0) {
            out.emplace_back(i, g);
            v = exact_div(v, g);
            if (v.degree() == 0) return out;
            h = divrem(h, v).second;
        }
    }
    if (v.degree() > 0) out.emplace_back(v.degree(), v);
    return out;
}

namespace detail {

template <class E>
Poly<E> random_below(Var v, int deg_bound, const E& like, Rng& rng) {
    std::vector<E> cs;
    cs.reserve(static_cast<size_t>(deg_bound));
    for (int i = 0; i < deg_bound; ++i) cs.push_back(random_element(like, rng));
    return Poly<E>(v, std::move(cs));
}

// Cantor-Zassenhaus equal-degree splitting: a is monic, squarefree, and a
// product of irreducibles all of degree d. Odd q uses the (q^d - 1)/2 power;
// characteristic 2 uses the additive trace map over F_2.
template <class E>
void equal_degree_split(const Poly<E>& a, int d, Rng& rng, std::vector<Poly<E>>& out) {
    if (a.degree() == d) {
        out.push_back(a);
        return;
    }
    const uint64_t p = characteristic(a.lc());
    const BigInt q = field_card(a.lc());
    const Poly<E> one = Poly<E>::constant(a.var(), a.lc().one_like());
    for (;;) {
        Poly<E> r = random_below(a.var(), a.degree(), a.lc(), rng);
        if (r.is_zero()) continue;
        Poly<E> g = gcd_monic(r, a);
        if (g.degree() == 0) {
            if (p == 2) {
                size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2) - 1;  // q = 2^bits
                size_t rounds = bits * static_cast<size_t>(d);
                Poly<E> t = r, cur = r;
                for (size_t i = 1; i < rounds; ++i) {
                    cur = divrem(cur * cur, a).second;
                    t = t + cur;
                }
                t = divrem(t, a).second;
                g = t.is_zero() ? a : gcd_monic(t, a);
            } else {
                BigInt e;
                mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
                e = (e - 1) / 2;
                Poly<E> s = pow_mod_poly(r, e, a) - one;
                g = s.is_zero() ? a : gcd_monic(s, a);
            }
        }
        if (g.degree() > 0 && g.degree() < a.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(exact_div(a, g), d, rng, out);
            return;
        }
    }
}

} // namespace detail

// Canonical factor order: by degree, then by coefficients from the leading
// one down. Makes factorizations structurally comparable.
template <class E>
void sort_factors(std::vector<FactorPower<E>>& fs) {
    std::sort(fs.begin(), fs.end(), [](const FactorPower<E>& a, const FactorPower<E>& b) {
        return cmp(a.base, b.base) < 0;
    });
}

template <class E>
Factorization<E> factor(const Poly<E>& a, uint64_t seed) {
    if (a.is_zero() || a.degree() < 1)
        throw DegenerateInput("factorization requires deg >= 1");
    if (!a.is_monic())
        throw NonMonicInput("factorization requires a monic input");

    Rng rng(seed);
    Factorization<E> out{a.lc().one_like(), {}};
    for (auto& [sf, mult] : squarefree_decomposition(a)) {
        for (auto& [d, prod] : distinct_degree_split(sf)) {
            std::vector<Poly<E>> irr;
            detail::equal_degree_split(prod, d, rng, irr);
            for (auto& b : irr) out.factors.push_back(FactorPower<E>{b, mult});
        }
    }
    sort_factors(out.factors);
    return out;
}

template <class E>
Poly<E> multiply_back(const Factorization<E>& f, Var v) {
    Poly<E> acc = Poly<E>::constant(v, f.unit);
    for (const auto& [b, m] : f.factors) acc = acc * pow_poly(b, static_cast<uint64_t>(m));
    return acc;
}

// Rabin irreducibility: Y^(q^n) = Y mod A, and for each prime r | n the
// polynomial Y^(q^(n/r)) - Y is coprime to A.
template <class E>
bool is_irreducible(const Poly<E>& a) {
    if (a.is_zero() || a.degree() < 1)
        throw DegenerateInput("irreducibility requires deg >= 1");
    if (!a.is_monic())
        throw NonMonicInput("irreducibility test requires a monic input");
    const int n = a.degree();
    if (n == 1) return true;

    const BigInt q = field_card(a.lc());
    const Poly<E> x = detail::var_mono(a.var(), a.lc());
    const Poly<E> xr = divrem(x, a).second;

    auto x_power_q_iter = [&](int times) {
        Poly<E> h = xr;
        for (int i = 0; i < times; ++i) h = detail::pow_mod_poly(h, q, a);
        return h;
    };

    if (!(x_power_q_iter(n) == xr)) return false;
    int m = n;
    for (int r = 2; r * r <= m; ++r) {
        if (m % r != 0) continue;
        while (m % r == 0) m /= r;
        Poly<E> diff = x_power_q_iter(n / r) - xr;
        if (diff.is_zero() || gcd_monic(diff, a).degree() > 0) return false;
    }
    if (m > 1) {
        Poly<E> diff = x_power_q_iter(n / m) - xr;
        if (diff.is_zero() || gcd_monic(diff, a).degree() > 0) return false;
    }
    return true;
}

template <class E>
Poly<E> random_monic(Var v, int deg, const E& like, Rng& rng) {
    std::vector<E> cs;
    cs.reserve(static_cast<size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i) cs.push_back(random_element(like, rng));
    cs.push_back(like.one_like());
    return Poly<E>(v, std::move(cs));
}

template <class E>
Poly<E> random_irreducible(Var v, int deg, const E& like, Rng& rng) {
    if (deg < 1)
        throw DegenerateInput("random irreducible requires deg >= 1");
    for (;;) {
        Poly<E> c = random_monic(v, deg, like, rng);
        if (is_irreducible(c)) return c;
    }
}

template <class E>
std::optional<PrimePower<E>> prime_power_structure(const Poly<E>& a, uint64_t seed) {
    Factorization<E> f = factor(a, seed);
    if (f.factors.size() != 1) return std::nullopt;
    return PrimePower<E>{f.factors[0].base, f.factors[0].multiplicity};
}

} // namespace kuores
