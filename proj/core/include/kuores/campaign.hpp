#pragma once

#include <optional>
#include <string>

#include "kuores/numeric.hpp"

namespace kuores {

enum class TheoremId { Main, Converse, Transitivity, ProductFormula };

const char* theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(const std::string& name);

struct Counterexample {
    std::string g;   // empty when the trial has no g input
    std::string f;
};

// Deterministic given (theorem, p, max_deg, trials, seed); wall_ms is
// informational only and never part of comparable output.
struct CampaignReport {
    TheoremId theorem;
    std::string field;   // "fp:<p>"
    int trials;
    uint64_t seed;
    int passed;
    int failed;
    std::optional<Counterexample> first_counterexample;
    double wall_ms;
};

// Trial i draws from a fresh generator seeded with seed + i, so trials are
// order-independent and could fan out across workers.
//   main:            g random irreducible, f random monic;
//                    kuo(g, f) must be a prime power.
//   converse:        g a product of 2-3 distinct irreducibles;
//                    kuo(g, f) must be reducible.
//   transitivity:    random monic f; single Frobenius orbit must coincide
//                    with single-irreducible-factor structure.
//   product-formula: kuo(g, f) must equal the splitting-field expansion.
CampaignReport run_campaign(TheoremId id, uint64_t p, int max_deg, int trials, uint64_t seed);

} // namespace kuores
