#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "kuores/expr.hpp"
#include "kuores/factor.hpp"

using namespace kuores;
using namespace kuores::testutil;

namespace {

// Exhaustive list of monic polynomials of exact degree d over F_p.
std::vector<Poly<Fp>> all_monic(Var v, int d, uint64_t p) {
    PrimeField k(p);
    std::vector<Poly<Fp>> out;
    std::vector<uint64_t> digits(static_cast<size_t>(d), 0);
    for (;;) {
        std::vector<Fp> cs;
        for (uint64_t x : digits) cs.push_back(k.make(x));
        cs.push_back(k.one());
        out.push_back(Poly<Fp>(v, std::move(cs)));
        size_t i = 0;
        while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    return out;
}

// Trial-division irreducibility oracle, independent of Rabin's criterion.
bool irreducible_by_trial_division(const Poly<Fp>& a, uint64_t p) {
    if (a.degree() <= 1) return a.degree() == 1;
    for (int d = 1; 2 * d <= a.degree(); ++d)
        for (const Poly<Fp>& b : all_monic(a.var(), d, p))
            if (divrem(a, b).second.is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("factorization multiplies back and yields irreducible monic factors") {
    Rng rng(61);
    for (uint64_t p : {uint64_t(2), uint64_t(3), uint64_t(5), uint64_t(101)}) {
        for (int i = 0; i < 40; ++i) {
            int d = 1 + static_cast<int>(rng.range(0, 7));
            Poly<Fp> a = random_monic(Var::Y, d, Fp{0, p}, rng);
            Factorization<Fp> f = factor(a, rng.next_u64());
            CHECK(f.unit.is_one());
            CHECK(multiply_back(f, Var::Y) == a);
            int total = 0;
            for (const auto& [base, mult] : f.factors) {
                CHECK(base.is_monic());
                CHECK(base.degree() >= 1);
                CHECK(mult >= 1);
                CHECK(is_irreducible(base));
                total += base.degree() * mult;
            }
            CHECK(total == a.degree());
        }
    }
}

TEST_CASE("every root appears as a linear factor with the right multiplicity") {
    Rng rng(62);
    for (uint64_t p : {uint64_t(2), uint64_t(3), uint64_t(5), uint64_t(7)}) {
        PrimeField k(p);
        for (int i = 0; i < 30; ++i) {
            int d = 1 + static_cast<int>(rng.range(0, 3));
            Poly<Fp> a = random_monic(Var::Y, d, Fp{0, p}, rng);
            Factorization<Fp> f = factor(a, rng.next_u64());
            for (uint64_t c = 0; c < p; ++c) {
                Fp x = k.make(c);
                // Multiplicity by repeated exact division.
                Poly<Fp> lin(Var::Y, {-x, k.one()});
                int mult = 0;
                Poly<Fp> rest = a;
                while (!rest.is_constant() && divrem(rest, lin).second.is_zero()) {
                    rest = exact_div(rest, lin);
                    ++mult;
                }
                int found = 0;
                for (const auto& [base, m] : f.factors)
                    if (base == lin) found = m;
                CHECK(found == mult);
                if (mult == 0) CHECK_FALSE(eval(a, x).is_zero());
            }
        }
    }
}

TEST_CASE("rabin irreducibility agrees with trial division, exhaustively") {
    for (uint64_t p : {uint64_t(2), uint64_t(3)}) {
        for (int d = 1; d <= 4; ++d) {
            for (const Poly<Fp>& a : all_monic(Var::Y, d, p)) {
                CHECK(is_irreducible(a) == irreducible_by_trial_division(a, p));
            }
        }
    }
}

TEST_CASE("known factorizations over F_5") {
    PrimeField k(5);
    Poly<Fp> a = parse_poly_fp("X^2 + 1", Var::X, 5);
    Factorization<Fp> f = factor(a, 0);
    REQUIRE(f.factors.size() == 2);
    CHECK(print_poly(f.factors[0].base) == "X + 2");
    CHECK(print_poly(f.factors[1].base) == "X + 3");
    CHECK(f.factors[0].multiplicity == 1);
    CHECK(f.factors[1].multiplicity == 1);

    // Frobenius: Y^5 - 2 = (Y + 3)^5 over F_5.
    Poly<Fp> b = parse_poly_fp("Y^5 - 2", Var::Y, 5);
    Factorization<Fp> fb = factor(b, 0);
    REQUIRE(fb.factors.size() == 1);
    CHECK(print_poly(fb.factors[0].base) == "Y + 3");
    CHECK(fb.factors[0].multiplicity == 5);

    Poly<Fp> c = parse_poly_fp("(Y - 1)^2 (Y + 1)", Var::Y, 5);
    Factorization<Fp> fc = factor(c, 0);
    REQUIRE(fc.factors.size() == 2);
    CHECK(print_poly(fc.factors[0].base) == "Y + 1");
    CHECK(fc.factors[0].multiplicity == 1);
    CHECK(print_poly(fc.factors[1].base) == "Y + 4");
    CHECK(fc.factors[1].multiplicity == 2);
}

TEST_CASE("factorization output is canonical: seed independent and sorted") {
    Rng rng(63);
    for (int i = 0; i < 30; ++i) {
        Poly<Fp> a = random_monic(Var::Y, 1 + static_cast<int>(rng.range(0, 6)), Fp{0, 5}, rng);
        Factorization<Fp> f1 = factor(a, 1);
        Factorization<Fp> f2 = factor(a, 999 + static_cast<uint64_t>(i));
        REQUIRE(f1.factors.size() == f2.factors.size());
        for (size_t j = 0; j < f1.factors.size(); ++j) {
            CHECK(f1.factors[j].base == f2.factors[j].base);
            CHECK(f1.factors[j].multiplicity == f2.factors[j].multiplicity);
        }
        for (size_t j = 1; j < f1.factors.size(); ++j) {
            const auto& prev = f1.factors[j - 1].base;
            const auto& cur = f1.factors[j].base;
            bool ordered = prev.degree() < cur.degree() ||
                           (prev.degree() == cur.degree() && cmp(prev, cur) < 0);
            CHECK(ordered);
        }
    }
}

TEST_CASE("squarefree decomposition recovers planted multiplicities") {
    PrimeField k(5);
    Poly<Fp> u = parse_poly_fp("Y + 1", Var::Y, 5);
    Poly<Fp> v = parse_poly_fp("Y + 2", Var::Y, 5);
    Poly<Fp> w = parse_poly_fp("Y^2 + 2", Var::Y, 5);
    Poly<Fp> a = u * pow_poly(v, 2) * pow_poly(w, 3);
    auto parts = squarefree_decomposition(a);
    Poly<Fp> back = Poly<Fp>::constant(Var::Y, k.one());
    for (const auto& [part, m] : parts) {
        CHECK(part.is_monic());
        CHECK(gcd_monic(part, derivative(part)).degree() == 0);
        back = back * pow_poly(part, static_cast<uint64_t>(m));
    }
    CHECK(back == a);

    // Perfect p-th power: the derivative vanishes identically.
    Poly<Fp> pp = pow_poly(w, 5);
    auto pparts = squarefree_decomposition(pp);
    REQUIRE(pparts.size() == 1);
    CHECK(pparts[0].first == w);
    CHECK(pparts[0].second == 5);
}

TEST_CASE("distinct-degree split buckets by factor degree") {
    // Over F_2: Y (Y+1) (Y^2+Y+1) (Y^3+Y+1) has degree buckets 1, 2, 3.
    Poly<Fp> f1 = parse_poly_fp("Y", Var::Y, 2);
    Poly<Fp> f2 = parse_poly_fp("Y + 1", Var::Y, 2);
    Poly<Fp> f3 = parse_poly_fp("Y^2 + Y + 1", Var::Y, 2);
    Poly<Fp> f4 = parse_poly_fp("Y^3 + Y + 1", Var::Y, 2);
    Poly<Fp> a = f1 * f2 * f3 * f4;
    auto buckets = distinct_degree_split(a);
    REQUIRE(buckets.size() == 3);
    CHECK(buckets[0].first == 1);
    CHECK(buckets[0].second == f1 * f2);
    CHECK(buckets[1].first == 2);
    CHECK(buckets[1].second == f3);
    CHECK(buckets[2].first == 3);
    CHECK(buckets[2].second == f4);
}

TEST_CASE("random_irreducible produces certified irreducibles") {
    Rng rng(64);
    for (uint64_t p : {uint64_t(2), uint64_t(7)}) {
        for (int d = 1; d <= 5; ++d) {
            Poly<Fp> a = random_irreducible(Var::Y, d, Fp{0, p}, rng);
            CHECK(a.degree() == d);
            CHECK(a.is_monic());
            CHECK(is_irreducible(a));
        }
    }
}

TEST_CASE("prime power structure detection") {
    Rng rng(65);
    for (int i = 0; i < 25; ++i) {
        Poly<Fp> g = random_irreducible(Var::Y, 1 + static_cast<int>(rng.range(0, 2)),
                                        Fp{0, 7}, rng);
        int e = 1 + static_cast<int>(rng.range(0, 3));
        auto pp = prime_power_structure(pow_poly(g, static_cast<uint64_t>(e)), rng.next_u64());
        REQUIRE(pp.has_value());
        CHECK(pp->base == g);
        CHECK(pp->exponent == e);
    }
    for (int i = 0; i < 25; ++i) {
        Poly<Fp> g1 = random_irreducible(Var::Y, 2, Fp{0, 7}, rng);
        Poly<Fp> g2 = random_irreducible(Var::Y, 2, Fp{0, 7}, rng);
        if (g1 == g2) continue;
        CHECK_FALSE(prime_power_structure(g1 * g2, rng.next_u64()).has_value());
    }
}

TEST_CASE("factorization input validation") {
    PrimeField k(5);
    Poly<Fp> nonmonic(Var::Y, {k.one(), k.make(2)});
    CHECK_THROWS_AS(factor(nonmonic, 0), NonMonicInput);
    CHECK_THROWS_AS(factor(Poly<Fp>::constant(Var::Y, k.one()), 0), DegenerateInput);
    CHECK_THROWS_AS(factor(Poly<Fp>(Var::Y), 0), DegenerateInput);
    CHECK_THROWS_AS(is_irreducible(Poly<Fp>(Var::Y)), DegenerateInput);
}
