#include "kuores/galois.hpp"

#include <algorithm>
#include <numeric>

#include "kuores/factor.hpp"
#include "kuores/resultant.hpp"

namespace kuores {

namespace {

// Roots of one monic irreducible factor inside the extension, i.e. the
// negated constant terms of its linear factors there.
std::vector<FqElem> roots_in_extension(const Poly<Fp>& irr, const FqCtxPtr& ctx, Rng& rng) {
    Poly<FqElem> lifted = embed_poly(ctx, irr);
    if (lifted.degree() == 1) return {-lifted[0]};
    Factorization<FqElem> f = factor(lifted, rng.next_u64());
    std::vector<FqElem> out;
    for (const auto& [b, m] : f.factors) {
        if (b.degree() != 1 || m != 1)
            throw Error("internal: irreducible factor does not split into distinct linears");
        out.push_back(-b[0]);
    }
    return out;
}

} // namespace

SplittingField splitting_field(const Poly<Fp>& f, uint64_t seed) {
    if (f.is_zero() || f.degree() < 1)
        throw DegenerateInput("splitting field requires deg >= 1");
    if (!f.is_monic())
        throw NonMonicInput("splitting field requires a monic input");

    Rng rng(seed);
    Factorization<Fp> base = factor(f, rng.next_u64());

    long L = 1;
    for (const auto& [b, m] : base.factors) L = std::lcm(L, static_cast<long>(b.degree()));

    const uint64_t p = f.lc().p;
    FqCtxPtr ctx;
    if (L == 1) {
        ctx = make_prime_context(p);
    } else {
        Poly<Fp> modulus =
            random_irreducible(Var::Z, static_cast<int>(L), Fp{0, p}, rng);
        ctx = make_fq_context(p, modulus);
    }

    SplittingField s{ctx, static_cast<int>(L), f, {}};
    for (const auto& [b, m] : base.factors)
        for (const FqElem& r : roots_in_extension(b, ctx, rng)) s.roots.emplace_back(r, m);

    std::sort(s.roots.begin(), s.roots.end(),
              [](const auto& a, const auto& b) { return cmp(a.first, b.first) < 0; });

    int total = 0;
    for (const auto& [r, m] : s.roots) {
        if (!eval_lifted(f, r).is_zero())
            throw Error("internal: claimed root does not annihilate the polynomial");
        total += m;
    }
    if (total != f.degree())
        throw Error("internal: root multiplicities do not sum to the degree");
    return s;
}

std::vector<std::vector<FqElem>> frobenius_orbits(const SplittingField& s) {
    std::vector<FqElem> distinct;
    distinct.reserve(s.roots.size());
    for (const auto& [r, m] : s.roots) distinct.push_back(r);

    std::vector<bool> visited(distinct.size(), false);
    std::vector<std::vector<FqElem>> orbits;
    for (size_t i = 0; i < distinct.size(); ++i) {
        if (visited[i]) continue;
        std::vector<FqElem> orbit;
        FqElem cur = distinct[i];
        for (;;) {
            auto it = std::find(distinct.begin(), distinct.end(), cur);
            if (it == distinct.end())
                throw Error("internal: Frobenius image is not a root");
            size_t k = static_cast<size_t>(it - distinct.begin());
            if (visited[k]) break;
            visited[k] = true;
            orbit.push_back(cur);
            cur = frobenius(cur);
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

bool transitivity_check(const Poly<Fp>& f, uint64_t seed) {
    SplittingField s = splitting_field(f, seed);
    const bool single_orbit = frobenius_orbits(s).size() == 1;
    const bool prime_power = prime_power_structure(f, seed + 1).has_value();
    if (single_orbit != prime_power)
        throw TheoremViolation(
            "Frobenius transitivity and prime-power structure disagree on " +
            std::to_string(f.degree()) + "-degree input");
    return single_orbit;
}

bool product_formula_check(const Poly<Fp>& g, const Poly<Fp>& f, uint64_t seed) {
    SplittingField s = splitting_field(g, seed);
    const FqCtxPtr& ctx = s.ctx;

    Poly<FqElem> prod = Poly<FqElem>::constant(Var::T, fq_one(ctx));
    for (const auto& [y, m] : s.roots) {
        std::vector<FqElem> lin{-eval_lifted(f, y), fq_one(ctx)};
        Poly<FqElem> factor_t(Var::T, std::move(lin));
        for (int i = 0; i < m; ++i) prod = prod * factor_t;
    }

    std::vector<Fp> base_coeffs;
    base_coeffs.reserve(prod.size());
    for (size_t i = 0; i < prod.size(); ++i) {
        if (!prod[i].in_base_field()) return false;
        base_coeffs.push_back(prod[i].is_zero() ? Fp{0, ctx->p} : prod[i].base_value());
    }
    Poly<Fp> lhs(Var::T, std::move(base_coeffs));

    return lhs == kuo_resultant(g, f).h;
}

Poly<Fp> minimal_polynomial(const FqElem& alpha, Var v) {
    std::vector<FqElem> conj;
    FqElem cur = alpha;
    do {
        conj.push_back(cur);
        cur = frobenius(cur);
    } while (!(cur == alpha));

    Poly<FqElem> prod = Poly<FqElem>::constant(v, alpha.one_like());
    for (const FqElem& c : conj) {
        std::vector<FqElem> lin{-c, alpha.one_like()};
        prod = prod * Poly<FqElem>(v, std::move(lin));
    }

    std::vector<Fp> cs;
    cs.reserve(prod.size());
    for (size_t i = 0; i < prod.size(); ++i) {
        if (!prod[i].in_base_field())
            throw Error("internal: minimal polynomial has a non-base coefficient");
        cs.push_back(prod[i].is_zero() ? Fp{0, alpha.ctx()->p} : prod[i].base_value());
    }
    return Poly<Fp>(v, std::move(cs));
}

} // namespace kuores
