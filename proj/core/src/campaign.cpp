#include "kuores/campaign.hpp"

#include <chrono>

#include "kuores/expr.hpp"
#include "kuores/factor.hpp"
#include "kuores/galois.hpp"
#include "kuores/resultant.hpp"
#include "kuores/rng.hpp"

namespace kuores {

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::Main: return "main";
        case TheoremId::Converse: return "converse";
        case TheoremId::Transitivity: return "transitivity";
        case TheoremId::ProductFormula: return "product-formula";
    }
    return "?";
}

std::optional<TheoremId> parse_theorem(const std::string& name) {
    if (name == "main") return TheoremId::Main;
    if (name == "converse") return TheoremId::Converse;
    if (name == "transitivity") return TheoremId::Transitivity;
    if (name == "product-formula") return TheoremId::ProductFormula;
    return std::nullopt;
}

namespace {

Poly<Fp> random_composite(int max_deg, const Fp& like, Rng& rng) {
    // Product of 2-3 pairwise distinct monic irreducibles, total degree
    // at most max_deg (which must be >= 2).
    const int parts = (max_deg >= 3 && rng.coin()) ? 3 : 2;
    for (;;) {
        std::vector<Poly<Fp>> gs;
        int budget = max_deg;
        bool ok = true;
        for (int i = 0; i < parts; ++i) {
            int room = budget - (parts - 1 - i);
            if (room < 1) {
                ok = false;
                break;
            }
            int d = static_cast<int>(rng.range(1, room));
            budget -= d;
            gs.push_back(random_irreducible(Var::Y, d, like, rng));
        }
        if (!ok) continue;
        for (size_t i = 0; ok && i < gs.size(); ++i)
            for (size_t j = i + 1; j < gs.size(); ++j)
                if (gs[i] == gs[j]) {
                    ok = false;
                    break;
                }
        if (!ok) continue;
        Poly<Fp> g = gs[0];
        for (size_t i = 1; i < gs.size(); ++i) g = g * gs[i];
        return g;
    }
}

struct TrialResult {
    bool pass;
    std::string g, f;
};

TrialResult run_trial(TheoremId id, uint64_t p, int max_deg, uint64_t trial_seed) {
    Rng rng(trial_seed);
    const Fp like{0, p};

    switch (id) {
        case TheoremId::Main: {
            Poly<Fp> g = random_irreducible(Var::Y, static_cast<int>(rng.range(1, max_deg)),
                                            like, rng);
            Poly<Fp> f = random_monic(Var::Y, static_cast<int>(rng.range(1, max_deg)), like, rng);
            Poly<Fp> h = kuo_resultant(g, f).h;
            bool pass = prime_power_structure(h, rng.next_u64()).has_value();
            return {pass, print_poly(g), print_poly(f)};
        }
        case TheoremId::Converse: {
            if (max_deg < 2)
                throw DegenerateInput("converse campaign needs max degree >= 2");
            Poly<Fp> g = random_composite(max_deg, like, rng);
            Poly<Fp> f = random_monic(Var::Y, static_cast<int>(rng.range(1, max_deg)), like, rng);
            Poly<Fp> h = kuo_resultant(g, f).h;
            bool pass = !is_irreducible(h);
            return {pass, print_poly(g), print_poly(f)};
        }
        case TheoremId::Transitivity: {
            Poly<Fp> f = random_monic(Var::Y, static_cast<int>(rng.range(1, max_deg)), like, rng);
            bool pass = true;
            try {
                transitivity_check(f, rng.next_u64());
            } catch (const TheoremViolation&) {
                pass = false;
            }
            return {pass, "", print_poly(f)};
        }
        case TheoremId::ProductFormula: {
            Poly<Fp> g = random_irreducible(Var::Y, static_cast<int>(rng.range(1, max_deg)),
                                            like, rng);
            Poly<Fp> f = random_monic(Var::Y, static_cast<int>(rng.range(1, max_deg)), like, rng);
            bool pass = product_formula_check(g, f, rng.next_u64());
            return {pass, print_poly(g), print_poly(f)};
        }
    }
    throw Error("internal: unknown theorem id");
}

} // namespace

CampaignReport run_campaign(TheoremId id, uint64_t p, int max_deg, int trials, uint64_t seed) {
    if (trials < 1)
        throw DegenerateInput("campaign needs at least one trial");
    if (max_deg < 1)
        throw DegenerateInput("campaign needs max degree >= 1");
    PrimeField check(p);
    (void)check;

    const auto t0 = std::chrono::steady_clock::now();
    CampaignReport rep{id, "fp:" + std::to_string(p), trials, seed, 0, 0, std::nullopt, 0.0};
    for (int i = 0; i < trials; ++i) {
        TrialResult r = run_trial(id, p, max_deg, seed + static_cast<uint64_t>(i));
        if (r.pass) {
            ++rep.passed;
        } else {
            ++rep.failed;
            if (!rep.first_counterexample)
                rep.first_counterexample = Counterexample{r.g, r.f};
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

} // namespace kuores
