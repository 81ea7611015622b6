#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "kuores/error.hpp"

namespace kuores {

using BigInt = mpz_class;

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(uint64_t n);

// Inverse of a modulo a prime p, in [1, p). Throws NotInvertible when a = 0 mod p.
uint64_t mod_inverse(uint64_t a, uint64_t p);

uint64_t mul_mod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod_u64(uint64_t a, uint64_t e, uint64_t m);

// ---------------------------------------------------------------------------
// Rational: exact element of Q, always in canonical form
// (gcd(|num|, den) = 1, den > 0, zero is 0/1).
// ---------------------------------------------------------------------------

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    explicit Rational(const BigInt& n) : q_(n) {}
    Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
        if (den == 0)
            throw DivisionByZero("rational with zero denominator");
        q_.canonicalize();
    }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero())
            throw NotInvertible("division by zero rational");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    Rational inv() const {
        if (is_zero())
            throw NotInvertible("inverse of zero");
        return Rational(mpq_class(1 / q_));
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }

    std::string to_string() const { return q_.get_str(); }

private:
    explicit Rational(const mpq_class& q) : q_(q) {}
    mpq_class q_;
};

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Rational mul_small(const Rational& a, long n) { return a * Rational(n); }
inline int cmp(const Rational& a, const Rational& b) {
    if (a == b) return 0;
    return a < b ? -1 : 1;
}

// ---------------------------------------------------------------------------
// Fp: element of a prime field F_p, p < 2^62. The modulus travels with the
// value; every binary operation checks that the moduli agree.
// ---------------------------------------------------------------------------

struct Fp {
    uint64_t v;
    uint64_t p;

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }

    Fp zero_like() const { return Fp{0, p}; }
    Fp one_like() const { return Fp{1, p}; }

    Fp operator-() const { return Fp{v == 0 ? 0 : p - v, p}; }
    Fp operator+(const Fp& o) const {
        check(o);
        uint64_t s = v + o.v;
        if (s >= p) s -= p;
        return Fp{s, p};
    }
    Fp operator-(const Fp& o) const {
        check(o);
        return Fp{v >= o.v ? v - o.v : v + p - o.v, p};
    }
    Fp operator*(const Fp& o) const {
        check(o);
        return Fp{mul_mod_u64(v, o.v, p), p};
    }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    Fp inv() const { return Fp{mod_inverse(v, p), p}; }

    bool operator==(const Fp& o) const {
        check(o);
        return v == o.v;
    }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string to_string() const { return std::to_string(v); }

private:
    void check(const Fp& o) const {
        if (p != o.p)
            throw FieldMismatch("F_p elements with different moduli: " +
                                std::to_string(p) + " vs " + std::to_string(o.p));
    }
};

inline Fp exact_div(const Fp& a, const Fp& b) { return a / b; }
inline Fp mul_small(const Fp& a, long n) {
    long r = n % static_cast<long>(a.p);
    if (r < 0) r += static_cast<long>(a.p);
    return a * Fp{static_cast<uint64_t>(r), a.p};
}
inline int cmp(const Fp& a, const Fp& b) {
    if (a.v == b.v) return 0;
    return a.v < b.v ? -1 : 1;
}
inline uint64_t characteristic(const Fp& a) { return a.p; }
inline BigInt field_card(const Fp& a) { return BigInt(static_cast<unsigned long>(a.p)); }
// p-th root in F_p is the identity (Frobenius is trivial on the prime field).
inline Fp pth_root(const Fp& a) { return a; }

// ---------------------------------------------------------------------------
// PrimeField: descriptor for F_p. Construction runs the deterministic
// primality check, so every minted element has a certified prime modulus.
// ---------------------------------------------------------------------------

class PrimeField {
public:
    explicit PrimeField(uint64_t p);

    uint64_t modulus() const { return p_; }

    Fp zero() const { return Fp{0, p_}; }
    Fp one() const { return Fp{1, p_}; }
    Fp make(uint64_t v) const { return Fp{v % p_, p_}; }
    Fp make_signed(long v) const {
        long r = v % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        return Fp{static_cast<uint64_t>(r), p_};
    }
    Fp from_bigint(const BigInt& n) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    uint64_t p_;
};

// Generic square-and-multiply; works for any field element with one_like().
template <class E>
E field_pow(const E& base, uint64_t e) {
    E acc = base.one_like();
    E b = base;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

template <class E>
E field_pow(const E& base, const BigInt& e) {
    if (e < 0)
        throw UndefinedOperation("field_pow with negative exponent");
    E acc = base.one_like();
    E b = base;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return acc;
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc * b;
        if (i + 1 < bits) b = b * b;
    }
    return acc;
}

} // namespace kuores
