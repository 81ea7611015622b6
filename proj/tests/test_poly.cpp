#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "kuores/bipoly.hpp"
#include "kuores/poly.hpp"

using namespace kuores;
using namespace kuores::testutil;

namespace {
const PrimeField F7(7);

Poly<Fp> fp_poly(std::initializer_list<long> cs) {
    std::vector<Fp> v;
    for (long c : cs) v.push_back(F7.make_signed(c));
    return Poly<Fp>(Var::Y, std::move(v));
}
} // namespace

TEST_CASE("construction trims trailing zeros and canonicalizes zero") {
    Poly<Fp> a(Var::Y, {F7.make(1), F7.make(2), F7.zero(), F7.zero()});
    CHECK(a.degree() == 1);
    Poly<Fp> z(Var::Y, {F7.zero(), F7.zero()});
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z == Poly<Fp>(Var::Y));
    CHECK_THROWS_AS(z.lc(), UndefinedOperation);
}

TEST_CASE("ring axioms on random polynomials") {
    Rng rng(21);
    for (int i = 0; i < 150; ++i) {
        Poly<Fp> a = random_poly_fp(Var::Y, 6, 7, rng);
        Poly<Fp> b = random_poly_fp(Var::Y, 6, 7, rng);
        Poly<Fp> c = random_poly_fp(Var::Y, 6, 7, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Poly<Fp>(Var::Y));
        if (!a.is_zero() && !b.is_zero())
            CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("divrem is euclidean division over a field") {
    Rng rng(22);
    for (int i = 0; i < 200; ++i) {
        Poly<Fp> a = random_poly_fp(Var::Y, 8, 7, rng);
        Poly<Fp> b = random_nonzero_fp(Var::Y, 5, 7, rng);
        auto [q, r] = divrem(a, b);
        CHECK(a == q * b + r);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(divrem(fp_poly({1, 1}), Poly<Fp>(Var::Y)), DivisionByZero);
}

TEST_CASE("divrem over a non-field ring requires a monic or constant divisor") {
    using BP = Poly<Poly<Fp>>;
    Poly<Fp> two = Poly<Fp>::constant(Var::X, F7.make(2));
    Poly<Fp> one = Poly<Fp>::constant(Var::X, F7.one());
    BP monic(Var::Y, {Poly<Fp>::monomial(Var::X, F7.one(), 1), one});
    BP nonmonic(Var::Y, {one, two});
    BP a = monic * nonmonic;
    CHECK(divrem(a, monic).second.is_zero());
    CHECK_THROWS_AS(divrem(a, nonmonic), UnsupportedDivision);
}

TEST_CASE("exact_div recovers the cofactor, univariate and bivariate") {
    Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        Poly<Fp> a = random_nonzero_fp(Var::Y, 5, 7, rng);
        Poly<Fp> b = random_nonzero_fp(Var::Y, 5, 7, rng);
        CHECK(exact_div(a * b, b) == a);
    }
    BiPolyQ g = Poly<PolyQ>(
        Var::Y, {PolyQ::monomial(Var::X, Rational(1), 2), PolyQ::constant(Var::X, Rational(3)),
                 PolyQ::constant(Var::X, Rational(1))});
    BiPolyQ h = Poly<PolyQ>(Var::Y, {PolyQ::monomial(Var::X, Rational(-2), 1),
                                     PolyQ::constant(Var::X, Rational(1))});
    CHECK(exact_div(g * h, h) == g);
    CHECK(exact_div(g * h, g) == h);
}

TEST_CASE("gcd_monic divides both inputs and absorbs common factors") {
    Rng rng(24);
    for (int i = 0; i < 100; ++i) {
        Poly<Fp> a = random_nonzero_fp(Var::Y, 4, 7, rng);
        Poly<Fp> b = random_nonzero_fp(Var::Y, 4, 7, rng);
        Poly<Fp> c = make_monic(random_nonzero_fp(Var::Y, 3, 7, rng));
        Poly<Fp> g = gcd_monic(a * c, b * c);
        CHECK(g.is_monic());
        CHECK(divrem(a * c, g).second.is_zero());
        CHECK(divrem(b * c, g).second.is_zero());
        CHECK(divrem(g, c).second.is_zero());
    }
    Poly<Fp> a = fp_poly({1, 1});
    CHECK(gcd_monic(a, Poly<Fp>(Var::Y)) == make_monic(a));
    CHECK_THROWS_AS(gcd_monic(Poly<Fp>(Var::Y), Poly<Fp>(Var::Y)), UndefinedOperation);
}

TEST_CASE("pow_poly matches iterated multiplication") {
    Rng rng(25);
    Poly<Fp> a = fp_poly({1, 1});
    Poly<Fp> acc = fp_poly({1});
    for (uint64_t e = 0; e <= 7; ++e) {
        CHECK(pow_poly(a, e) == acc);
        acc = acc * a;
    }
    CHECK_THROWS_AS(pow_poly(Poly<Fp>(Var::Y), 0), UndefinedOperation);
    CHECK(pow_poly(Poly<Fp>(Var::Y), 3).is_zero());
}

TEST_CASE("derivative satisfies the product rule; x^p collapses in char p") {
    Rng rng(26);
    for (int i = 0; i < 100; ++i) {
        Poly<Fp> a = random_poly_fp(Var::Y, 6, 7, rng);
        Poly<Fp> b = random_poly_fp(Var::Y, 6, 7, rng);
        CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));
    }
    Poly<Fp> xp = Poly<Fp>::monomial(Var::Y, F7.one(), 7);
    CHECK(derivative(xp).is_zero());
    Poly<Rational> q = Poly<Rational>::monomial(Var::Y, Rational(1), 7);
    CHECK(derivative(q) == Poly<Rational>::monomial(Var::Y, Rational(7), 6));
}

TEST_CASE("prem is the pseudo-remainder: lc(b)^(da-db+1) a = qb + prem") {
    Rng rng(27);
    for (int i = 0; i < 100; ++i) {
        Poly<Fp> a = random_nonzero_fp(Var::Y, 7, 7, rng);
        Poly<Fp> b = random_nonzero_fp(Var::Y, 4, 7, rng);
        if (a.degree() < b.degree()) std::swap(a, b);
        if (b.degree() < 1) continue;
        uint64_t k = static_cast<uint64_t>(a.degree() - b.degree() + 1);
        Poly<Fp> scaled = scale(a, field_pow(b.lc(), k));
        CHECK(prem(a, b) == divrem(scaled, b).second);
    }
}

TEST_CASE("eval is a ring homomorphism") {
    Rng rng(28);
    for (int i = 0; i < 100; ++i) {
        Poly<Fp> a = random_poly_fp(Var::Y, 6, 7, rng);
        Poly<Fp> b = random_poly_fp(Var::Y, 6, 7, rng);
        Fp x = F7.make(rng.below(7));
        CHECK(eval(a * b, x) == eval(a, x) * eval(b, x));
        CHECK(eval(a + b, x) == eval(a, x) + eval(b, x));
    }
    CHECK(eval(Poly<Fp>(Var::Y), F7.make(3)) == F7.zero());
}

TEST_CASE("make_monic and cmp total order") {
    Poly<Fp> a = fp_poly({2, 4});
    CHECK(make_monic(a).is_monic());
    CHECK(make_monic(a) == fp_poly({4, 1}));

    Rng rng(29);
    for (int i = 0; i < 100; ++i) {
        Poly<Fp> x = random_poly_fp(Var::Y, 5, 7, rng);
        Poly<Fp> y = random_poly_fp(Var::Y, 5, 7, rng);
        CHECK(cmp(x, x) == 0);
        CHECK(cmp(x, y) == -cmp(y, x));
        if (cmp(x, y) == 0) CHECK(x == y);
    }
}

TEST_CASE("mixed variables are rejected") {
    Poly<Fp> a = fp_poly({1, 1});
    Poly<Fp> b(Var::X, {F7.one(), F7.one()});
    CHECK_THROWS_AS((void)(a + b), VariableMismatch);
    CHECK_THROWS_AS((void)(a * b), VariableMismatch);
    CHECK_THROWS_AS(divrem(a, b), VariableMismatch);
}

TEST_CASE("mul_small respects the characteristic") {
    Poly<Fp> a = fp_poly({1, 2, 3});
    CHECK(mul_small(a, 7).is_zero());
    CHECK(mul_small(a, -1) == -a);
    Poly<Rational> q(Var::Y, {Rational(1), Rational(2)});
    CHECK(mul_small(q, 3) == q + q + q);
}

TEST_CASE("bipoly helpers: lift, evaluate, content, gcd") {
    PolyQ x2 = PolyQ::monomial(Var::X, Rational(1), 2);
    PolyQ one = PolyQ::constant(Var::X, Rational(1));
    PolyQ zero(Var::X);

    Poly<Rational> g(Var::Y, {Rational(-1), Rational(0), Rational(1)});
    BiPolyQ lifted = lift_scalars(g, Var::X);
    CHECK(lifted.degree() == 2);
    CHECK(lifted[0] == PolyQ::constant(Var::X, Rational(-1)));

    BiPolyQ b(Var::Y, {x2, zero, one});
    CHECK(eval_coeff_var(b, Rational(2)) ==
          Poly<Rational>(Var::Y, {Rational(4), Rational(0), Rational(1)}));

    CHECK(low_order(x2) == 2);
    CHECK(low_order(one) == 0);

    BiPolyQ p(Var::Y, {scale(x2, Rational(2)), scale(x2, Rational(4))});
    BiPolyQ prim = primitive_inner(p);
    CHECK(content_inner(prim).is_one());

    BiPolyQ c(Var::Y, {x2, one});
    BiPolyQ d(Var::Y, {one, one});
    BiPolyQ gcd1 = gcd_bipoly(c * d, c);
    CHECK(exact_div(c, gcd1).is_constant());
}
