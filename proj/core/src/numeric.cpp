#include "kuores/numeric.hpp"

namespace kuores {

uint64_t mul_mod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t pow_mod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t acc = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) acc = mul_mod_u64(acc, a, m);
        a = mul_mod_u64(a, a, m);
        e >>= 1;
    }
    return acc;
}

namespace {

bool miller_rabin_witness(uint64_t n, uint64_t a, uint64_t d, int s) {
    uint64_t x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all n < 3.3 * 10^24.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

uint64_t mod_inverse(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0)
        throw NotInvertible("0 has no inverse mod " + std::to_string(p));
    // Extended Euclid on (a, p) with coefficients tracked mod p.
    int64_t t = 0, new_t = 1;
    uint64_t r = p, new_r = a;
    while (new_r != 0) {
        uint64_t q = r / new_r;
        int64_t tmp_t = t - static_cast<int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1)
        throw NotInvertible(std::to_string(a) + " is not invertible mod " + std::to_string(p));
    return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(p)) : static_cast<uint64_t>(t);
}

PrimeField::PrimeField(uint64_t p) : p_(p) {
    if (p < 2 || p >= (uint64_t{1} << 62))
        throw NotPrime("prime modulus must satisfy 2 <= p < 2^62, got " + std::to_string(p));
    if (!is_prime_u64(p))
        throw NotPrime(std::to_string(p) + " is not prime");
}

Fp PrimeField::from_bigint(const BigInt& n) const {
    BigInt r = n % BigInt(static_cast<unsigned long>(p_));
    if (r < 0) r += BigInt(static_cast<unsigned long>(p_));
    return Fp{r.get_ui(), p_};
}

} // namespace kuores
