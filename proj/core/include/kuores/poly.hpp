#pragma once

#include <concepts>
#include <cstdint>
#include <utility>
#include <vector>

#include "kuores/error.hpp"

namespace kuores {

enum class Var : uint8_t { X, Y, Z, T };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::X: return "X";
        case Var::Y: return "Y";
        case Var::Z: return "Z";
        case Var::T: return "T";
    }
    return "?";
}

template <class C>
concept FieldElem = requires(const C& a) {
    { a.inv() } -> std::convertible_to<C>;
};

namespace detail {
template <class C>
void trim(std::vector<C>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}
} // namespace detail

// ---------------------------------------------------------------------------
// Poly: dense univariate polynomial over an exact coefficient domain.
// Canonical form: no stored trailing zeros, so lc() is nonzero whenever the
// polynomial is. The variable tag travels with the value and binary
// operations refuse to mix variables.
//
// Poly itself satisfies the coefficient-domain interface (add, negate,
// multiply, exact_div, is_zero, one_like), so Poly<Poly<...>> provides the
// bivariate views k[X][T] and k[T][Y].
// ---------------------------------------------------------------------------

template <class C>
class Poly {
public:
    explicit Poly(Var v) : var_(v) {}

    Poly(Var v, std::vector<C> coeffs) : var_(v), c_(std::move(coeffs)) {
        detail::trim(c_);
    }

    static Poly constant(Var v, const C& c) {
        std::vector<C> cs;
        if (!c.is_zero()) cs.push_back(c);
        return Poly(v, std::move(cs));
    }

    static Poly monomial(Var v, const C& c, size_t k) {
        std::vector<C> cs;
        if (!c.is_zero()) {
            cs.reserve(k + 1);
            for (size_t i = 0; i < k; ++i) cs.push_back(c.zero_like());
            cs.push_back(c);
        }
        return Poly(v, std::move(cs));
    }

    Var var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    size_t size() const { return c_.size(); }
    const std::vector<C>& coeffs() const { return c_; }
    const C& operator[](size_t i) const { return c_[i]; }

    const C& lc() const {
        if (c_.empty())
            throw UndefinedOperation("leading coefficient of the zero polynomial");
        return c_.back();
    }

    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    Poly zero_like() const { return Poly(var_); }
    Poly one_like() const {
        if (c_.empty())
            throw UndefinedOperation("one_like on a zero polynomial carries no coefficient context");
        return constant(var_, c_.back().one_like());
    }

    void check_var(const Poly& o) const {
        if (var_ != o.var_)
            throw VariableMismatch(std::string("mixed variables ") + var_name(var_) + " and " +
                                   var_name(o.var_));
    }

    Poly operator-() const {
        std::vector<C> r;
        r.reserve(c_.size());
        for (const C& c : c_) r.push_back(-c);
        return Poly(var_, std::move(r));
    }

    Poly operator+(const Poly& o) const {
        check_var(o);
        const Poly& big = c_.size() >= o.c_.size() ? *this : o;
        const Poly& small = c_.size() >= o.c_.size() ? o : *this;
        std::vector<C> r = big.c_;
        for (size_t i = 0; i < small.c_.size(); ++i) r[i] = r[i] + small.c_[i];
        detail::trim(r);
        return Poly(var_, std::move(r));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        check_var(o);
        if (is_zero() || o.is_zero()) return Poly(var_);
        C z = c_.back().zero_like();
        std::vector<C> r(c_.size() + o.c_.size() - 1, z);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        detail::trim(r);
        return Poly(var_, std::move(r));
    }

    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    bool operator==(const Poly& o) const {
        check_var(o);
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    Var var_;
    std::vector<C> c_;
};

template <class C>
Poly<C> scale(const Poly<C>& a, const C& s) {
    if (s.is_zero()) return Poly<C>(a.var());
    std::vector<C> r;
    r.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) r.push_back(a[i] * s);
    detail::trim(r);
    return Poly<C>(a.var(), std::move(r));
}

template <class C>
Poly<C> mul_small(const Poly<C>& a, long n) {
    std::vector<C> r;
    r.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) r.push_back(mul_small(a[i], n));
    detail::trim(r);
    return Poly<C>(a.var(), std::move(r));
}

// Formal derivative; characteristic-aware because mul_small reduces the
// integer factor in the coefficient domain (p * c = 0 over F_p).
template <class C>
Poly<C> derivative(const Poly<C>& a) {
    if (a.size() <= 1) return Poly<C>(a.var());
    std::vector<C> r;
    r.reserve(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r.push_back(mul_small(a[i], static_cast<long>(i)));
    detail::trim(r);
    return Poly<C>(a.var(), std::move(r));
}

// Quotient and remainder with A = Q*B + R, deg R < deg B. Requires a field
// coefficient domain, or a monic divisor over any integral domain.
template <class C>
std::pair<Poly<C>, Poly<C>> divrem(const Poly<C>& a, const Poly<C>& b) {
    a.check_var(b);
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<C>(a.var()), a};

    bool monic = b.is_monic();
    if constexpr (!FieldElem<C>) {
        if (!monic)
            throw UnsupportedDivision("non-monic divisor over a non-field coefficient domain");
    }

    std::vector<C> rem = a.coeffs();
    size_t db = static_cast<size_t>(b.degree());
    std::vector<C> quot(rem.size() - db, a.lc().zero_like());
    for (size_t top = rem.size(); top-- > db;) {
        if (rem[top].is_zero()) continue;
        C t = rem[top];
        if (!monic) {
            if constexpr (FieldElem<C>) t = t * b.lc().inv();
        }
        size_t shift = top - db;
        quot[shift] = t;
        for (size_t j = 0; j <= db; ++j)
            rem[shift + j] = rem[shift + j] - t * b[j];
    }
    detail::trim(rem);
    detail::trim(quot);
    return {Poly<C>(a.var(), std::move(quot)), Poly<C>(a.var(), std::move(rem))};
}

// Exact division; throws Error when B does not divide A. Works over any
// integral domain when the quotient exists, because every leading-coefficient
// division along the way is then exact.
template <class C>
Poly<C> exact_div(const Poly<C>& a, const Poly<C>& b) {
    a.check_var(b);
    if (b.is_zero())
        throw DivisionByZero("exact division by zero polynomial");
    if (a.is_zero()) return a;
    if (a.degree() < b.degree())
        throw Error("inexact polynomial division (degree)");

    std::vector<C> rem = a.coeffs();
    size_t db = static_cast<size_t>(b.degree());
    std::vector<C> quot(rem.size() - db, a.lc().zero_like());
    for (size_t top = rem.size(); top-- > db;) {
        if (rem[top].is_zero()) continue;
        C t = exact_div(rem[top], b[db]);
        size_t shift = top - db;
        quot[shift] = t;
        for (size_t j = 0; j <= db; ++j)
            rem[shift + j] = rem[shift + j] - t * b[j];
        if (!rem[top].is_zero())
            throw Error("inexact polynomial division (leading term)");
    }
    detail::trim(rem);
    if (!rem.empty())
        throw Error("inexact polynomial division (remainder)");
    detail::trim(quot);
    return Poly<C>(a.var(), std::move(quot));
}

template <class C>
Poly<C> make_monic(const Poly<C>& a)
    requires FieldElem<C>
{
    if (a.is_zero())
        throw UndefinedOperation("cannot normalize the zero polynomial to monic");
    if (a.is_monic()) return a;
    return scale(a, a.lc().inv());
}

// Monic gcd over a field via Euclid's algorithm.
template <class C>
Poly<C> gcd_monic(const Poly<C>& a, const Poly<C>& b)
    requires FieldElem<C>
{
    a.check_var(b);
    if (a.is_zero() && b.is_zero())
        throw UndefinedOperation("gcd(0, 0) is undefined");
    Poly<C> u = a, v = b;
    while (!v.is_zero()) {
        auto [q, r] = divrem(u, v);
        u = v;
        v = r;
    }
    return make_monic(u);
}

template <class C>
Poly<C> pow_poly(const Poly<C>& a, uint64_t e) {
    if (a.is_zero()) {
        if (e == 0)
            throw UndefinedOperation("0^0 for polynomials");
        return a;
    }
    Poly<C> acc = a.one_like();
    Poly<C> b = a;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A = Q*B + prem(A, B).
// Requires deg A >= deg B >= 0; stays inside the coefficient domain.
template <class C>
Poly<C> prem(const Poly<C>& a, const Poly<C>& b) {
    a.check_var(b);
    if (b.is_zero())
        throw DivisionByZero("pseudo-remainder by zero polynomial");
    if (a.degree() < b.degree())
        throw UndefinedOperation("prem requires deg A >= deg B");
    const C lb = b.lc();
    Poly<C> r = a;
    int e = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Poly<C> t = Poly<C>::monomial(a.var(), r.lc(), static_cast<size_t>(r.degree() - b.degree()));
        r = scale(r, lb) - t * b;
        --e;
    }
    for (; e > 0; --e) r = scale(r, lb);
    return r;
}

// Horner evaluation at a point of the same coefficient domain.
template <class C>
C eval(const Poly<C>& a, const C& x) {
    C acc = x.zero_like();
    for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

// Canonical total order: by degree, then coefficients from the top down.
template <class C>
int cmp(const Poly<C>& a, const Poly<C>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

} // namespace kuores
