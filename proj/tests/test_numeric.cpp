#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kuores/numeric.hpp"
#include "kuores/rng.hpp"

using namespace kuores;

TEST_CASE("primality of small and structured integers") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(5));
    CHECK(is_prime_u64(101));
    CHECK(is_prime_u64((uint64_t(1) << 61) - 1));
    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(4));
    CHECK_FALSE(is_prime_u64(561));      // Carmichael
    CHECK_FALSE(is_prime_u64(3215031751ULL));
    CHECK_FALSE(is_prime_u64(uint64_t(1) << 40));
}

TEST_CASE("mul_mod and pow_mod near the word boundary") {
    const uint64_t m = (uint64_t(1) << 61) - 1;
    CHECK(mul_mod_u64(uint64_t(1) << 60, 3, m) == (uint64_t(1) << 60) + 1);
    CHECK(pow_mod_u64(2, 61, m) == 1);  // 2^61 = m + 1

    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        uint64_t a = rng.below(1000), e = rng.below(12), p = 101;
        uint64_t naive = 1;
        for (uint64_t k = 0; k < e; ++k) naive = naive * (a % p) % p;
        CHECK(pow_mod_u64(a, e, p) == naive);
    }
}

TEST_CASE("mod_inverse is a two-sided inverse and rejects zero") {
    for (uint64_t a = 1; a < 101; ++a) CHECK(mul_mod_u64(a, mod_inverse(a, 101), 101) == 1);
    CHECK_THROWS_AS(mod_inverse(0, 101), NotInvertible);
}

TEST_CASE("Fp field axioms over F_101") {
    PrimeField k(101);
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        Fp a = k.make(rng.below(101)), b = k.make(rng.below(101)), c = k.make(rng.below(101));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == k.zero());
        CHECK(a + (-a) == k.zero());
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
    for (uint64_t a = 1; a < 101; ++a) CHECK(k.make(a) * k.make(a).inv() == k.one());
    CHECK_THROWS_AS(k.zero().inv(), NotInvertible);
}

TEST_CASE("Fp mixes of different moduli are rejected") {
    Fp a{1, 5}, b{1, 7};
    CHECK_THROWS_AS((void)(a + b), FieldMismatch);
    CHECK_THROWS_AS((void)(a * b), FieldMismatch);
    CHECK_THROWS_AS((void)(a == b), FieldMismatch);
}

TEST_CASE("PrimeField validates the modulus") {
    CHECK_THROWS_AS(PrimeField(6), NotPrime);
    CHECK_THROWS_AS(PrimeField(1), NotPrime);
    CHECK_THROWS_AS(PrimeField(0), NotPrime);
    PrimeField k(7);
    CHECK(k.make_signed(-3) == k.make(4));
    CHECK(k.make_signed(-7) == k.zero());
    CHECK(k.make(10) == k.make(3));
}

TEST_CASE("from_bigint agrees with gmp reduction, including negatives") {
    PrimeField k(97);
    BigInt n("123456789012345678901234567890");
    BigInt r = n % 97;
    CHECK(k.from_bigint(n) == k.make(r.get_ui()));
    BigInt neg = -n;
    Fp expect = -k.from_bigint(n);
    CHECK(k.from_bigint(neg) == expect);
}

TEST_CASE("Rational normalizes and satisfies field identities") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).to_string() == "-1/2");
    CHECK(Rational(-4, -2).to_string() == "2");
    CHECK(Rational(0, 5).is_zero());
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(3, 4).zero_like().inv(), NotInvertible);

    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        Rational a(rng.range(-20, 20), rng.range(1, 9));
        Rational b(rng.range(-20, 20), rng.range(1, 9));
        CHECK(a + b - b == a);
        if (!b.is_zero()) CHECK(a / b * b == a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("field_pow matches iterated multiplication for both exponent types") {
    PrimeField k(101);
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        Fp a = k.make(rng.below(101));
        uint64_t e = rng.below(20);
        Fp acc = k.one();
        for (uint64_t j = 0; j < e; ++j) acc = acc * a;
        CHECK(field_pow(a, e) == acc);
        CHECK(field_pow(a, BigInt(static_cast<unsigned long>(e))) == acc);
    }
    CHECK(field_pow(k.zero(), uint64_t(0)) == k.one());
    CHECK_THROWS_AS(field_pow(k.make(2), BigInt(-1)), Error);
}

TEST_CASE("Fermat: pth_root over a prime field is the identity") {
    PrimeField k(13);
    for (uint64_t a = 0; a < 13; ++a) {
        CHECK(pth_root(k.make(a)) == k.make(a));
        CHECK(field_pow(k.make(a), uint64_t(13)) == k.make(a));
    }
}

TEST_CASE("adl hooks on scalars") {
    PrimeField k(11);
    CHECK(characteristic(k.make(3)) == 11);
    CHECK(field_card(k.make(3)) == BigInt(11));
    CHECK(exact_div(k.make(6), k.make(3)) == k.make(2));
    CHECK(mul_small(k.make(5), -1) == k.make(6));
    CHECK(mul_small(k.make(5), 11) == k.zero());
    CHECK(cmp(k.make(3), k.make(5)) < 0);
    CHECK(cmp(k.make(5), k.make(5)) == 0);

    CHECK(exact_div(Rational(3), Rational(2)) == Rational(3, 2));
    CHECK(mul_small(Rational(3), -4) == Rational(-12));
    CHECK(cmp(Rational(1, 2), Rational(2, 3)) < 0);
}
