#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kuores/numeric.hpp"
#include "kuores/poly.hpp"
#include "kuores/rng.hpp"

namespace kuores {

// F_{p^d} = F_p[Z] / (m(Z)) with m monic irreducible of degree d >= 1.
// Contexts are immutable and shared by the elements they mint.
struct FqContext {
    uint64_t p;
    Poly<Fp> modulus;   // monic irreducible, variable Z
    size_t d;
    BigInt card;        // p^d
};

using FqCtxPtr = std::shared_ptr<const FqContext>;

// Validates p prime and the modulus monic irreducible of degree >= 1;
// a reducible modulus raises ReducibleModulus. Defined in ext_field.cpp
// because the irreducibility check lives in the factorization module.
FqCtxPtr make_fq_context(uint64_t p, const Poly<Fp>& modulus);

// F_p itself as the trivial extension (modulus Z).
FqCtxPtr make_prime_context(uint64_t p);

class FqElem {
public:
    FqElem(FqCtxPtr ctx, Poly<Fp> rep) : ctx_(std::move(ctx)), rep_(std::move(rep)) {
        if (rep_.degree() >= static_cast<int>(ctx_->d))
            rep_ = divrem(rep_, ctx_->modulus).second;
    }

    const FqCtxPtr& ctx() const { return ctx_; }
    const Poly<Fp>& rep() const { return rep_; }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_.is_one(); }
    bool in_base_field() const { return rep_.degree() <= 0; }

    // Constant-term view; only meaningful when in_base_field().
    Fp base_value() const {
        if (!in_base_field())
            throw UndefinedOperation("element is not in the base field");
        return rep_.is_zero() ? Fp{0, ctx_->p} : rep_[0];
    }

    FqElem zero_like() const { return FqElem(ctx_, Poly<Fp>(Var::Z)); }
    FqElem one_like() const {
        return FqElem(ctx_, Poly<Fp>::constant(Var::Z, Fp{1, ctx_->p}));
    }

    FqElem operator-() const { return FqElem(ctx_, -rep_); }
    FqElem operator+(const FqElem& o) const { check(o); return FqElem(ctx_, rep_ + o.rep_); }
    FqElem operator-(const FqElem& o) const { check(o); return FqElem(ctx_, rep_ - o.rep_); }
    FqElem operator*(const FqElem& o) const { check(o); return FqElem(ctx_, rep_ * o.rep_); }

    FqElem inv() const {
        if (is_zero())
            throw NotInvertible("zero has no inverse in F_q");
        Poly<Fp> r0 = ctx_->modulus, r1 = rep_;
        Poly<Fp> t0(Var::Z), t1 = Poly<Fp>::constant(Var::Z, Fp{1, ctx_->p});
        while (!r1.is_zero()) {
            auto [q, r] = divrem(r0, r1);
            r0 = r1;
            r1 = r;
            Poly<Fp> t2 = t0 - q * t1;
            t0 = t1;
            t1 = t2;
        }
        // r0 is a nonzero constant because the modulus is irreducible.
        return FqElem(ctx_, scale(t0, r0.lc().inv()));
    }

    FqElem operator/(const FqElem& o) const { return *this * o.inv(); }

    bool operator==(const FqElem& o) const { check(o); return rep_ == o.rep_; }
    bool operator!=(const FqElem& o) const { return !(*this == o); }

private:
    void check(const FqElem& o) const {
        if (ctx_ == o.ctx_) return;
        if (ctx_->p == o.ctx_->p && ctx_->modulus == o.ctx_->modulus) return;
        throw FieldMismatch("elements of different extension fields");
    }

    FqCtxPtr ctx_;
    Poly<Fp> rep_;
};

inline FqElem embed(const FqCtxPtr& ctx, const Fp& c) {
    if (c.p != ctx->p)
        throw FieldMismatch("embedding from a different prime field");
    return FqElem(ctx, Poly<Fp>::constant(Var::Z, c));
}

inline FqElem fq_zero(const FqCtxPtr& ctx) { return FqElem(ctx, Poly<Fp>(Var::Z)); }
inline FqElem fq_one(const FqCtxPtr& ctx) { return embed(ctx, Fp{1, ctx->p}); }

// The residue class of Z, a generator of the representation.
inline FqElem fq_gen(const FqCtxPtr& ctx) {
    return FqElem(ctx, Poly<Fp>::monomial(Var::Z, Fp{1, ctx->p}, 1));
}

inline Poly<FqElem> embed_poly(const FqCtxPtr& ctx, const Poly<Fp>& a) {
    std::vector<FqElem> cs;
    cs.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) cs.push_back(embed(ctx, a[i]));
    return Poly<FqElem>(a.var(), std::move(cs));
}

// Horner evaluation of a in F_p[y] at a point of the extension.
inline FqElem eval_lifted(const Poly<Fp>& a, const FqElem& x) {
    if (!a.is_zero() && a.lc().p != x.ctx()->p)
        throw FieldMismatch("coefficient characteristic differs from the point's");
    FqElem acc = x.zero_like();
    for (size_t i = a.size(); i-- > 0;) acc = acc * x + embed(x.ctx(), a[i]);
    return acc;
}

inline FqElem frobenius(const FqElem& x) { return field_pow(x, x.ctx()->p); }
inline Fp frobenius(const Fp& x) { return x; }

// Coefficient-domain hooks used by the generic factorization templates.
inline uint64_t characteristic(const FqElem& x) { return x.ctx()->p; }
inline BigInt field_card(const FqElem& x) { return x.ctx()->card; }

// p-th root, i.e. the inverse of Frobenius: c^(p^(d-1)).
inline FqElem pth_root(const FqElem& x) {
    BigInt e = x.ctx()->card / x.ctx()->p;
    return field_pow(x, e);
}

inline FqElem exact_div(const FqElem& a, const FqElem& b) { return a / b; }
inline FqElem mul_small(const FqElem& a, long k) {
    const uint64_t p = a.ctx()->p;
    long long m = static_cast<long long>(k) % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return a * embed(a.ctx(), Fp{static_cast<uint64_t>(m), p});
}

inline int cmp(const FqElem& a, const FqElem& b) { return cmp(a.rep(), b.rep()); }

inline FqElem random_element(const FqElem& like, Rng& rng) {
    const FqCtxPtr& ctx = like.ctx();
    std::vector<Fp> cs;
    cs.reserve(ctx->d);
    for (size_t i = 0; i < ctx->d; ++i) cs.push_back(Fp{rng.below(ctx->p), ctx->p});
    return FqElem(ctx, Poly<Fp>(Var::Z, std::move(cs)));
}

inline Fp random_element(const Fp& like, Rng& rng) {
    return Fp{rng.below(like.p), like.p};
}

} // namespace kuores
