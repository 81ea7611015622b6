#pragma once

#include <optional>
#include <vector>

#include "kuores/bipoly.hpp"
#include "kuores/matrix.hpp"
#include "kuores/numeric.hpp"
#include "kuores/poly.hpp"

namespace kuores {

// Orientation convention used throughout: Res(A, B) = lc(A)^deg B * prod of
// B over the roots of A (with multiplicity). The standard Sylvester layout
// below has exactly this determinant, and with g monic it makes
// h = (-1)^deg g * Res_Y(g, f - T) = prod (T - f(y_i)) hold literally.

template <class R>
Matrix<R> sylvester_matrix(const Poly<R>& a, const Poly<R>& b) {
    a.check_var(b);
    if (a.is_zero() || b.is_zero())
        throw DegenerateResultant("resultant of a zero polynomial");
    const int m = a.degree(), n = b.degree();
    if (m == 0 && n == 0)
        throw DegenerateResultant("resultant of two constants");
    R z = a.lc().zero_like();
    Matrix<R> s(static_cast<size_t>(m + n), static_cast<size_t>(m + n), z);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s.at(i, i + j) = a[static_cast<size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s.at(n + i, i + j) = b[static_cast<size_t>(n - j)];
    return s;
}

template <class R>
R resultant_bareiss(const Poly<R>& a, const Poly<R>& b) {
    return det_bareiss(sylvester_matrix(a, b));
}

// Resultant by the subresultant pseudo-remainder sequence (Collins/Brown,
// in the form of Cohen's Algorithm 3.3.7). All divisions are exact in the
// coefficient domain.
template <class R>
R resultant_subres(Poly<R> a, Poly<R> b) {
    a.check_var(b);
    if (a.is_zero() || b.is_zero())
        throw DegenerateResultant("resultant of a zero polynomial");
    if (a.is_constant() && b.is_constant())
        throw DegenerateResultant("resultant of two constants");
    if (b.is_constant()) return field_pow(b.lc(), static_cast<uint64_t>(a.degree()));
    if (a.is_constant()) return field_pow(a.lc(), static_cast<uint64_t>(b.degree()));

    bool neg = false;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) neg = !neg;
        std::swap(a, b);
    }
    R g = a.lc().one_like();
    R h = g;
    for (;;) {
        const int da = a.degree(), db = b.degree();
        const int delta = da - db;
        if ((da & 1) && (db & 1)) neg = !neg;
        Poly<R> rem = prem(a, b);
        a = b;
        R divisor = g * field_pow(h, static_cast<uint64_t>(delta));
        if (rem.is_zero()) return a.lc().zero_like();
        std::vector<R> cs;
        cs.reserve(rem.size());
        for (size_t i = 0; i < rem.size(); ++i)
            cs.push_back(rem[i].is_zero() ? rem[i] : exact_div(rem[i], divisor));
        b = Poly<R>(a.var(), std::move(cs));
        if (b.is_zero()) return a.lc().zero_like();
        g = a.lc();
        if (delta > 0)
            h = (delta == 1) ? g
                             : exact_div(field_pow(g, static_cast<uint64_t>(delta)),
                                         field_pow(h, static_cast<uint64_t>(delta - 1)));
        if (b.degree() == 0) {
            const int q = a.degree();
            R num = field_pow(b.lc(), static_cast<uint64_t>(q));
            R res = (q >= 2) ? exact_div(num, field_pow(h, static_cast<uint64_t>(q - 1))) : num;
            return neg ? -res : res;
        }
    }
}

// Public resultant: subresultant PRS, cross-checked against the Bareiss
// determinant of the Sylvester matrix when verify is set.
template <class R>
R resultant(const Poly<R>& a, const Poly<R>& b, bool verify = true) {
    R r = resultant_subres(a, b);
    if (verify) {
        if (!a.is_constant() || !b.is_constant()) {
            R d = resultant_bareiss(a, b);
            if (!(r == d))
                throw Error("internal: subresultant and Bareiss resultants disagree");
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Evaluation points for the interpolation route. The generic fallback says
// "not available", which disables interpolation over domains that are not
// fields with enough elements.
// ---------------------------------------------------------------------------

template <class K>
std::optional<std::vector<K>> enumerate_points(const K&, size_t, size_t) {
    return std::nullopt;
}

inline std::optional<std::vector<Rational>> enumerate_points(const Rational&, size_t need,
                                                             size_t /*min_field_size*/) {
    std::vector<Rational> pts;
    pts.reserve(need);
    for (size_t i = 0; i < need; ++i) pts.emplace_back(static_cast<long>(i));
    return pts;
}

inline std::optional<std::vector<Fp>> enumerate_points(const Fp& like, size_t need,
                                                       size_t min_field_size) {
    if (like.p <= min_field_size) return std::nullopt;
    std::vector<Fp> pts;
    pts.reserve(need);
    for (size_t i = 0; i < need; ++i) pts.push_back(Fp{i, like.p});
    return pts;
}

template <class K>
Poly<K> lagrange_interpolate(Var v, const std::vector<K>& xs, const std::vector<K>& ys)
    requires FieldElem<K>
{
    Poly<K> acc(v);
    for (size_t j = 0; j < xs.size(); ++j) {
        Poly<K> numer = Poly<K>::constant(v, xs[j].one_like());
        K denom = xs[j].one_like();
        for (size_t l = 0; l < xs.size(); ++l) {
            if (l == j) continue;
            std::vector<K> lin{-xs[l], xs[j].one_like()};
            numer = numer * Poly<K>(v, std::move(lin));
            denom = denom * (xs[j] - xs[l]);
        }
        acc = acc + scale(numer, ys[j] * denom.inv());
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Kuo resultant: h(T) = (-1)^deg g * Res_Y(g, f - T), monic of degree deg g.
// ---------------------------------------------------------------------------

template <class K>
struct KuoResult {
    Poly<K> h;      // polynomial in T over the base domain
    int g_degree;
    int sign;       // (-1)^deg g
};

// Interpolation route: evaluate h at deg g + 1 points t_j via scalar
// resultants Res_Y(g, f - t_j) and reconstruct by Lagrange interpolation.
// Available only when the scalar field has more than deg g + deg f points.
template <class K>
std::optional<Poly<K>> kuo_by_interpolation(const Poly<K>& g, const Poly<K>& f) {
    if constexpr (!FieldElem<K>) {
        (void)g;
        (void)f;
        return std::nullopt;
    } else {
        if (f.degree() < 1) return std::nullopt;
        const size_t m = static_cast<size_t>(g.degree());
        auto pts = enumerate_points(g.lc(), m + 1,
                                    static_cast<size_t>(g.degree() + f.degree()));
        if (!pts) return std::nullopt;
        std::vector<K> ys;
        ys.reserve(pts->size());
        for (const K& t : *pts) {
            Poly<K> shifted = f - Poly<K>::constant(f.var(), t);
            K r = resultant(g, shifted, false);
            ys.push_back((g.degree() & 1) ? -r : r);
        }
        return lagrange_interpolate(Var::T, *pts, ys);
    }
}

template <class K>
KuoResult<K> kuo_resultant(const Poly<K>& g, const Poly<K>& f, bool verify = true) {
    if (!g.is_zero() && !f.is_zero()) g.check_var(f);
    if (g.is_zero() || g.degree() < 1)
        throw DegenerateInput("kuo resultant requires deg g >= 1");
    if (!g.is_monic())
        throw NonMonicInput("kuo resultant requires monic g");

    const Var yv = g.var();
    const K one = g.lc().one_like();
    const Poly<K> t_mono = Poly<K>::monomial(Var::T, one, 1);

    BiPoly<K> a = lift_scalars(g, Var::T);
    BiPoly<K> b = f.is_zero() ? BiPoly<K>(yv) : lift_scalars(f, Var::T);
    b = b - BiPoly<K>::constant(yv, t_mono);

    Poly<K> res = resultant(a, b, verify);
    Poly<K> h = (g.degree() & 1) ? -res : res;

    if (verify) {
        auto hi = kuo_by_interpolation(g, f);
        if (hi && !(*hi == h))
            throw Error("internal: interpolated kuo resultant disagrees");
    }
    if (h.degree() != g.degree() || !h.is_monic())
        throw Error("internal: kuo resultant is not monic of degree deg g");
    return KuoResult<K>{h, g.degree(), (g.degree() & 1) ? -1 : 1};
}

} // namespace kuores
