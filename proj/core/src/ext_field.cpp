#include "kuores/ext_field.hpp"

#include "kuores/factor.hpp"

namespace kuores {

FqCtxPtr make_fq_context(uint64_t p, const Poly<Fp>& modulus) {
    PrimeField base(p);  // validates primality and range
    (void)base;
    if (modulus.is_zero() || modulus.degree() < 1)
        throw ReducibleModulus("extension modulus must have degree >= 1");
    if (!modulus.is_monic())
        throw NonMonicInput("extension modulus must be monic");
    if (modulus.var() != Var::Z)
        throw VariableMismatch("extension modulus must be a polynomial in Z");
    for (size_t i = 0; i < modulus.size(); ++i)
        if (modulus[i].p != p)
            throw FieldMismatch("modulus coefficients not over F_p");
    if (modulus.degree() > 1 && !is_irreducible(modulus))
        throw ReducibleModulus("extension modulus is reducible");

    const size_t d = static_cast<size_t>(modulus.degree());
    BigInt card = 1;
    for (size_t i = 0; i < d; ++i) card *= BigInt(static_cast<unsigned long>(p));
    return std::make_shared<const FqContext>(FqContext{p, modulus, d, card});
}

FqCtxPtr make_prime_context(uint64_t p) {
    return make_fq_context(p, Poly<Fp>::monomial(Var::Z, Fp{1, p}, 1));
}

} // namespace kuores
