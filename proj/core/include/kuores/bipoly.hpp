#pragma once

#include "kuores/numeric.hpp"
#include "kuores/poly.hpp"

namespace kuores {

// Bivariate view: polynomial in an outer variable whose coefficients are
// polynomials in an inner variable. BiPolyQ is the Q[X][T] (or Q[X][Y])
// object the series-side operations work with.
template <class C>
using BiPoly = Poly<Poly<C>>;

using PolyQ = Poly<Rational>;
using BiPolyQ = BiPoly<Rational>;

// Lift k[Y] into (k[T])[Y]: each scalar coefficient becomes a constant
// polynomial in the new coefficient variable.
template <class K>
BiPoly<K> lift_scalars(const Poly<K>& a, Var coeff_var) {
    std::vector<Poly<K>> cs;
    cs.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        cs.push_back(Poly<K>::constant(coeff_var, a[i]));
    return BiPoly<K>(a.var(), std::move(cs));
}

// Substitute a scalar for the coefficient variable: (k[T])[Y] -> k[Y].
template <class K>
Poly<K> eval_coeff_var(const BiPoly<K>& a, const K& t) {
    std::vector<K> cs;
    cs.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) cs.push_back(eval(a[i], t));
    return Poly<K>(a.var(), std::move(cs));
}

// Order of the inner variable: the lowest exponent with a nonzero coefficient.
template <class C>
int low_order(const Poly<C>& a) {
    if (a.is_zero())
        throw UndefinedOperation("order of the zero polynomial");
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) return static_cast<int>(i);
    return 0;
}

// Content of a bivariate polynomial with field scalars: the monic gcd of its
// inner-variable coefficients.
template <class F>
Poly<F> content_inner(const BiPoly<F>& a)
    requires FieldElem<F>
{
    if (a.is_zero())
        throw UndefinedOperation("content of the zero polynomial");
    Poly<F> g = a[0].zero_like();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        g = g.is_zero() ? make_monic(a[i]) : gcd_monic(g, a[i]);
        if (g.is_one()) break;
    }
    return g;
}

template <class F>
BiPoly<F> primitive_inner(const BiPoly<F>& a)
    requires FieldElem<F>
{
    Poly<F> c = content_inner(a);
    if (c.is_one()) return a;
    std::vector<Poly<F>> cs;
    cs.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        cs.push_back(a[i].is_zero() ? a[i] : exact_div(a[i], c));
    return BiPoly<F>(a.var(), std::move(cs));
}

// Primitive in X, leading T-coefficient monic in X.
template <class F>
BiPoly<F> normalize_bipoly(const BiPoly<F>& a)
    requires FieldElem<F>
{
    BiPoly<F> p = primitive_inner(a);
    F u = p.lc().lc();
    if (u.is_one()) return p;
    F ui = u.inv();
    std::vector<Poly<F>> cs;
    cs.reserve(p.size());
    for (size_t i = 0; i < p.size(); ++i) cs.push_back(scale(p[i], ui));
    return BiPoly<F>(p.var(), std::move(cs));
}

// Gcd in k(X)[T] of two polynomials given in k[X][T], computed by the
// primitive pseudo-remainder sequence so all intermediate values stay in
// k[X][T]. The result is primitive in X and scaled so that its leading
// T-coefficient is monic as a polynomial in X.
template <class F>
BiPoly<F> gcd_bipoly(const BiPoly<F>& a, const BiPoly<F>& b)
    requires FieldElem<F>
{
    a.check_var(b);
    if (a.is_zero() && b.is_zero())
        throw UndefinedOperation("gcd(0, 0) is undefined");
    if (a.is_zero()) return normalize_bipoly(b);
    if (b.is_zero()) return normalize_bipoly(a);

    BiPoly<F> u = primitive_inner(a);
    BiPoly<F> v = primitive_inner(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        if (v.is_constant()) {
            // nonzero content-free constant: coprime in k(X)[T]
            return v.one_like();
        }
        BiPoly<F> r = prem(u, v);
        u = v;
        v = r.is_zero() ? r : primitive_inner(r);
    }
    return normalize_bipoly(u);
}

} // namespace kuores
