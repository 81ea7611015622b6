#pragma once

#include <utility>
#include <vector>

#include "kuores/ext_field.hpp"
#include "kuores/numeric.hpp"
#include "kuores/poly.hpp"

namespace kuores {

// Splitting field of a monic f over F_p: the extension F_{p^L} with L the
// lcm of the distinct irreducible factor degrees, together with all roots.
// Roots are sorted canonically and carry their multiplicities; the sum of
// multiplicities equals deg f.
struct SplittingField {
    FqCtxPtr ctx;
    int L;
    Poly<Fp> poly;
    std::vector<std::pair<FqElem, int>> roots;
};

// The seed steers the extension-modulus choice and the factorization's
// internal splitting; the set of roots is canonical once the modulus is
// fixed.
SplittingField splitting_field(const Poly<Fp>& f, uint64_t seed);

// Orbits of Frobenius x -> x^p on the distinct roots. Each orbit starts at
// its canonically smallest unvisited root and lists successive Frobenius
// images in cyclic order.
std::vector<std::vector<FqElem>> frobenius_orbits(const SplittingField& s);

// Single Frobenius orbit on the roots of f <=> f is a power of one monic
// irreducible. Returns the orbit side; raises TheoremViolation if the two
// sides ever disagree.
bool transitivity_check(const Poly<Fp>& f, uint64_t seed);

// Expands prod (T - f(y_i)) over the splitting field of g, checks all
// coefficients land in F_p, and compares with the resultant construction
// h = (-1)^deg g Res_Y(g, f - T). True on exact agreement.
bool product_formula_check(const Poly<Fp>& g, const Poly<Fp>& f, uint64_t seed);

// Minimal polynomial of alpha over F_p: product of (v - conjugate) over the
// distinct Frobenius conjugates of alpha.
Poly<Fp> minimal_polynomial(const FqElem& alpha, Var v = Var::X);

} // namespace kuores
