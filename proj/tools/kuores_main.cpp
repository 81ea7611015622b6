#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kuores/campaign.hpp"
#include "kuores/expr.hpp"
#include "kuores/factor.hpp"
#include "kuores/galois.hpp"
#include "kuores/newton.hpp"
#include "kuores/resultant.hpp"

using json = nlohmann::ordered_json;
using namespace kuores;

namespace {

struct UsageError {
    std::string message;
};

enum class FieldKind { Q, Fp, QX };

struct FieldChoice {
    FieldKind kind;
    uint64_t p = 0;
    std::string raw;
};

FieldChoice parse_field(const std::string& s) {
    if (s == "q") return {FieldKind::Q, 0, s};
    if (s == "qx") return {FieldKind::QX, 0, s};
    if (s.rfind("fp:", 0) == 0) {
        uint64_t p = 0;
        try {
            size_t used = 0;
            p = std::stoull(s.substr(3), &used);
            if (used != s.size() - 3) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw UsageError{"invalid field '" + s + "': expected fp:<prime>"};
        }
        PrimeField check(p);  // throws NotPrime / Error on bad modulus
        (void)check;
        return {FieldKind::Fp, p, s};
    }
    throw UsageError{"invalid field '" + s + "': expected q, fp:<p>, or qx"};
}

// The single variable the expressions use, besides the coefficient variable
// X in bivariate contexts. Falls back to def when only constants (or only X)
// appear.
Var infer_main_var(const std::vector<ExprPtr>& exprs, bool bivariate, Var def) {
    bool seen[4] = {false, false, false, false};
    for (const auto& e : exprs)
        for (Var v : used_vars(e)) seen[static_cast<size_t>(v)] = true;
    if (bivariate) seen[static_cast<size_t>(Var::X)] = false;
    std::vector<Var> vars;
    for (size_t i = 0; i < 4; ++i)
        if (seen[i]) vars.push_back(static_cast<Var>(i));
    if (vars.empty()) return def;
    if (vars.size() == 1) return vars[0];
    std::string msg = bivariate ? "expected one main variable besides X, got"
                                : "expected a single variable, got";
    for (Var v : vars) msg += std::string(" ") + var_name(v);
    throw UsageError{msg};
}

json make_doc(const std::string& command, const std::string& field) {
    json j;
    j["command"] = command;
    j["field"] = field;
    j["inputs"] = json::object();
    j["result"] = json::object();
    j["verdict"] = nullptr;
    j["prime_power"] = nullptr;
    j["report"] = nullptr;
    return j;
}

void emit(const json& doc, const std::string& text, bool json_mode) {
    if (json_mode)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

// ---------------------------------------------------------------------------
// kuo
// ---------------------------------------------------------------------------

int run_kuo(const FieldChoice& field, const std::string& gs, const std::string& fs,
            bool json_mode, uint64_t seed) {
    json doc = make_doc("kuo", field.raw);
    std::string text;
    int code = 0;

    ExprPtr ge = parse_expr(gs), fe = parse_expr(fs);

    if (field.kind == FieldKind::Q) {
        Var v = infer_main_var({ge, fe}, false, Var::Y);
        Poly<Rational> g = to_poly_q(ge, v), f = to_poly_q(fe, v);
        KuoResult<Rational> r = kuo_resultant(g, f);
        doc["inputs"]["g"] = print_poly(g);
        doc["inputs"]["f"] = print_poly(f);
        doc["result"]["h"] = print_poly(r.h);
        text = "h = " + print_poly(r.h) + "\n";
    } else if (field.kind == FieldKind::Fp) {
        Var v = infer_main_var({ge, fe}, false, Var::Y);
        Poly<Fp> g = to_poly_fp(ge, v, field.p), f = to_poly_fp(fe, v, field.p);
        KuoResult<Fp> r = kuo_resultant(g, f);
        auto pp = prime_power_structure(r.h, seed);
        const bool girr = is_irreducible(g);
        doc["inputs"]["g"] = print_poly(g);
        doc["inputs"]["f"] = print_poly(f);
        doc["result"]["h"] = print_poly(r.h);
        doc["verdict"] = girr ? "irreducible" : "reducible";
        text = "h = " + print_poly(r.h) + "\n";
        if (pp) {
            doc["prime_power"] = {{"base", print_poly(pp->base)}, {"exponent", pp->exponent}};
            text += "prime power: base = " + print_poly(pp->base) +
                    ", exponent = " + std::to_string(pp->exponent) + "\n";
        } else {
            text += "prime power: none\n";
            code = 1;
        }
        text += std::string("verdict: ") + (girr ? "irreducible" : "reducible") + "\n";
        if (!girr) code = 1;
    } else {
        Var v = infer_main_var({ge, fe}, true, Var::Y);
        BiPolyQ g = to_bipoly_q(ge, v), f = to_bipoly_q(fe, v);
        KuoResult<Poly<Rational>> r = kuo_resultant(g, f);
        auto pp = prime_power_over_series(r.h);
        IrreducibilityVerdict dv = dumas_irreducible(r.h);
        doc["inputs"]["g"] = print_poly(g);
        doc["inputs"]["f"] = print_poly(f);
        doc["result"]["h"] = print_poly(r.h);
        doc["result"]["reason"] = dv.reason;
        doc["verdict"] = dv.irreducible() ? "irreducible" : "inconclusive";
        text = "h = " + print_poly(r.h) + "\n";
        if (pp) {
            doc["prime_power"] = {{"base", print_poly(pp->base)}, {"exponent", pp->exponent}};
            text += "prime power: base = " + print_poly(pp->base) +
                    ", exponent = " + std::to_string(pp->exponent) + "\n";
        } else {
            text += "prime power: none\n";
        }
        text += std::string("verdict: ") + (dv.irreducible() ? "irreducible" : "inconclusive") +
                " (" + dv.reason + ")\n";
    }
    emit(doc, text, json_mode);
    return code;
}

// ---------------------------------------------------------------------------
// resultant
// ---------------------------------------------------------------------------

int run_resultant(const FieldChoice& field, const std::string& as, const std::string& bs,
                  bool json_mode) {
    json doc = make_doc("resultant", field.raw);
    std::string text;

    ExprPtr ae = parse_expr(as), be = parse_expr(bs);

    if (field.kind == FieldKind::Q) {
        Var v = infer_main_var({ae, be}, false, Var::Y);
        Poly<Rational> a = to_poly_q(ae, v), b = to_poly_q(be, v);
        Rational r = resultant(a, b);
        doc["inputs"]["a"] = print_poly(a);
        doc["inputs"]["b"] = print_poly(b);
        doc["result"]["res"] = r.to_string();
        text = "res = " + r.to_string() + "\n";
    } else if (field.kind == FieldKind::Fp) {
        Var v = infer_main_var({ae, be}, false, Var::Y);
        Poly<Fp> a = to_poly_fp(ae, v, field.p), b = to_poly_fp(be, v, field.p);
        Fp r = resultant(a, b);
        doc["inputs"]["a"] = print_poly(a);
        doc["inputs"]["b"] = print_poly(b);
        doc["result"]["res"] = r.to_string();
        text = "res = " + r.to_string() + "\n";
    } else {
        Var v = infer_main_var({ae, be}, true, Var::Y);
        BiPolyQ a = to_bipoly_q(ae, v), b = to_bipoly_q(be, v);
        Poly<Rational> r = resultant(a, b);
        doc["inputs"]["a"] = print_poly(a);
        doc["inputs"]["b"] = print_poly(b);
        doc["result"]["res"] = print_poly(r);
        text = "res = " + print_poly(r) + "\n";
    }
    emit(doc, text, json_mode);
    return 0;
}

// ---------------------------------------------------------------------------
// factor
// ---------------------------------------------------------------------------

std::string factorization_string(const Factorization<Fp>& f) {
    std::string s;
    for (const auto& [base, mult] : f.factors) {
        s += "(" + print_poly(base) + ")";
        if (mult > 1) s += "^" + std::to_string(mult);
    }
    return s;
}

int run_factor(const FieldChoice& field, const std::string& ps, bool json_mode, uint64_t seed) {
    if (field.kind != FieldKind::Fp)
        throw UsageError{"factor requires --field fp:<p>"};
    ExprPtr pe = parse_expr(ps);
    Var v = infer_main_var({pe}, false, Var::X);
    Poly<Fp> a = to_poly_fp(pe, v, field.p);
    Factorization<Fp> f = factor(a, seed);

    json doc = make_doc("factor", field.raw);
    doc["inputs"]["poly"] = print_poly(a);
    doc["result"]["factorization"] = factorization_string(f);
    doc["result"]["unit"] = f.unit.to_string();
    doc["result"]["factors"] = json::array();
    for (const auto& [base, mult] : f.factors)
        doc["result"]["factors"].push_back(
            {{"poly", print_poly(base)}, {"multiplicity", mult}});

    emit(doc, factorization_string(f) + "\n", json_mode);
    return 0;
}

// ---------------------------------------------------------------------------
// irred
// ---------------------------------------------------------------------------

int run_irred(const FieldChoice& field, const std::string& ps, bool json_mode) {
    json doc = make_doc("irred", field.raw);
    std::string text;
    int code = 0;

    ExprPtr pe = parse_expr(ps);

    if (field.kind == FieldKind::Fp) {
        Var v = infer_main_var({pe}, false, Var::X);
        Poly<Fp> a = to_poly_fp(pe, v, field.p);
        const bool irr = is_irreducible(a);
        doc["inputs"]["poly"] = print_poly(a);
        doc["verdict"] = irr ? "irreducible" : "reducible";
        text = std::string("verdict: ") + (irr ? "irreducible" : "reducible") + "\n";
        if (!irr) code = 1;
    } else if (field.kind == FieldKind::QX) {
        Var v = infer_main_var({pe}, true, Var::T);
        BiPolyQ a = to_bipoly_q(pe, v);
        IrreducibilityVerdict dv = dumas_irreducible(a);
        doc["inputs"]["poly"] = print_poly(a);
        doc["result"]["reason"] = dv.reason;
        doc["verdict"] = dv.irreducible() ? "irreducible" : "inconclusive";
        text = std::string("verdict: ") + (dv.irreducible() ? "irreducible" : "inconclusive") +
               " (" + dv.reason + ")\n";
        if (!dv.irreducible()) code = 1;
    } else {
        throw UsageError{
            "irreducibility over q is not supported; use --field fp:<p> or --field qx"};
    }
    emit(doc, text, json_mode);
    return code;
}

// ---------------------------------------------------------------------------
// newton / initial-part
// ---------------------------------------------------------------------------

std::string points_string(const std::vector<std::pair<int, int>>& pts) {
    std::string s;
    for (const auto& [j, o] : pts) {
        if (!s.empty()) s += " ";
        s += "(" + std::to_string(j) + ", " + std::to_string(o) + ")";
    }
    return s;
}

json points_json(const std::vector<std::pair<int, int>>& pts) {
    json arr = json::array();
    for (const auto& [j, o] : pts) arr.push_back(json::array({j, o}));
    return arr;
}

int run_newton(const FieldChoice& field, const std::string& ps, bool json_mode) {
    json doc = make_doc("newton", field.raw);
    ExprPtr pe = parse_expr(ps);
    Var v = infer_main_var({pe}, true, Var::T);

    NewtonPolygon np;
    if (field.kind == FieldKind::QX) {
        BiPolyQ a = to_bipoly_q(pe, v);
        doc["inputs"]["poly"] = print_poly(a);
        np = newton_polygon(a);
    } else if (field.kind == FieldKind::Fp) {
        Poly<Poly<Fp>> a = to_bipoly_fp(pe, v, field.p);
        doc["inputs"]["poly"] = print_poly(a);
        np = newton_polygon(a);
    } else {
        throw UsageError{"newton requires --field qx or --field fp:<p>"};
    }

    doc["result"]["support"] = points_json(np.support);
    doc["result"]["vertices"] = points_json(np.vertices);
    std::string text = "support: " + points_string(np.support) + "\n" +
                       "vertices: " + points_string(np.vertices) + "\n";
    emit(doc, text, json_mode);
    return 0;
}

std::pair<long, long> parse_weights(const std::string& ws) {
    size_t comma = ws.find(',');
    if (comma == std::string::npos)
        throw UsageError{"--weights expects two positive integers 'a,b'"};
    try {
        size_t ua = 0, ub = 0;
        long a = std::stol(ws.substr(0, comma), &ua);
        long b = std::stol(ws.substr(comma + 1), &ub);
        if (ua != comma || ub != ws.size() - comma - 1 || a <= 0 || b <= 0)
            throw std::invalid_argument("bad weights");
        return {a, b};
    } catch (const std::exception&) {
        throw UsageError{"--weights expects two positive integers 'a,b'"};
    }
}

int run_initial_part(const FieldChoice& field, const std::string& ps, const std::string& ws,
                     bool json_mode) {
    auto [a, b] = parse_weights(ws);
    json doc = make_doc("initial-part", field.raw);
    ExprPtr pe = parse_expr(ps);
    Var v = infer_main_var({pe}, true, Var::T);

    std::string initial;
    if (field.kind == FieldKind::QX) {
        BiPolyQ h = to_bipoly_q(pe, v);
        doc["inputs"]["poly"] = print_poly(h);
        initial = print_poly(weighted_initial_part(h, a, b));
    } else if (field.kind == FieldKind::Fp) {
        Poly<Poly<Fp>> h = to_bipoly_fp(pe, v, field.p);
        doc["inputs"]["poly"] = print_poly(h);
        initial = print_poly(weighted_initial_part(h, a, b));
    } else {
        throw UsageError{"initial-part requires --field qx or --field fp:<p>"};
    }
    doc["inputs"]["weights"] = ws;
    doc["result"]["initial_part"] = initial;
    emit(doc, "initial part = " + initial + "\n", json_mode);
    return 0;
}

// ---------------------------------------------------------------------------
// galois
// ---------------------------------------------------------------------------

int run_galois(const FieldChoice& field, const std::string& ps, bool json_mode, uint64_t seed) {
    if (field.kind != FieldKind::Fp)
        throw UsageError{"galois requires --field fp:<p>"};
    ExprPtr pe = parse_expr(ps);
    Var v = infer_main_var({pe}, false, Var::X);
    Poly<Fp> f = to_poly_fp(pe, v, field.p);

    SplittingField s = splitting_field(f, seed);
    auto orbits = frobenius_orbits(s);
    const bool transitive = transitivity_check(f, seed);
    auto pp = prime_power_structure(f, seed + 1);

    json doc = make_doc("galois", field.raw);
    doc["inputs"]["poly"] = print_poly(f);
    doc["result"]["L"] = s.L;
    doc["result"]["modulus"] = print_poly(s.ctx->modulus);
    doc["result"]["roots"] = json::array();
    for (const auto& [r, m] : s.roots)
        doc["result"]["roots"].push_back({{"value", print_fq(r)}, {"multiplicity", m}});
    doc["result"]["orbits"] = json::array();
    for (const auto& orbit : orbits) {
        json arr = json::array();
        for (const FqElem& r : orbit) arr.push_back(print_fq(r));
        doc["result"]["orbits"].push_back(arr);
    }
    doc["result"]["transitive"] = transitive;
    if (pp)
        doc["prime_power"] = {{"base", print_poly(pp->base)}, {"exponent", pp->exponent}};

    std::string text = "L = " + std::to_string(s.L) + "\n" +
                       "modulus = " + print_poly(s.ctx->modulus) + "\n";
    for (const auto& [r, m] : s.roots)
        text += "root: " + print_fq(r) + " (multiplicity " + std::to_string(m) + ")\n";
    for (size_t i = 0; i < orbits.size(); ++i) {
        text += "orbit " + std::to_string(i + 1) + ":";
        for (const FqElem& r : orbits[i]) text += " " + print_fq(r);
        text += "\n";
    }
    text += std::string("transitive: ") + (transitive ? "yes" : "no") + "\n";
    if (pp)
        text += "prime power: base = " + print_poly(pp->base) +
                ", exponent = " + std::to_string(pp->exponent) + "\n";
    else
        text += "prime power: none\n";

    emit(doc, text, json_mode);
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const std::string& theorem, uint64_t p, int trials, int max_deg, uint64_t seed,
               bool json_mode) {
    auto id = parse_theorem(theorem);
    if (!id)
        throw UsageError{"unknown theorem '" + theorem +
                         "': expected main, converse, transitivity, or product-formula"};

    CampaignReport rep = run_campaign(*id, p, max_deg, trials, seed);
    std::cerr << "wall time: " << rep.wall_ms << " ms\n";

    json doc = make_doc("verify", rep.field);
    json r;
    r["theorem"] = theorem_name(rep.theorem);
    r["field"] = rep.field;
    r["trials"] = rep.trials;
    r["seed"] = rep.seed;
    r["passed"] = rep.passed;
    r["failed"] = rep.failed;
    if (rep.first_counterexample) {
        json ce;
        if (!rep.first_counterexample->g.empty()) ce["g"] = rep.first_counterexample->g;
        ce["f"] = rep.first_counterexample->f;
        r["first_counterexample"] = ce;
    } else {
        r["first_counterexample"] = nullptr;
    }
    doc["report"] = r;

    std::string text = std::string("theorem: ") + theorem_name(rep.theorem) + "\n" +
                       "field: " + rep.field + "\n" +
                       "trials: " + std::to_string(rep.trials) + "\n" +
                       "seed: " + std::to_string(rep.seed) + "\n" +
                       "passed: " + std::to_string(rep.passed) + "\n" +
                       "failed: " + std::to_string(rep.failed) + "\n";
    if (rep.first_counterexample) {
        if (!rep.first_counterexample->g.empty())
            text += "counterexample g = " + rep.first_counterexample->g + "\n";
        text += "counterexample f = " + rep.first_counterexample->f + "\n";
    }
    emit(doc, text, json_mode);
    return rep.failed == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// examples
// ---------------------------------------------------------------------------

int run_examples(bool json_mode) {
    bool pass = true;
    std::string text;
    json doc = make_doc("examples", "qx");

    // First worked example: g = (Y^2 - X^3)^2 - X^7, f = Y^2 - X^3.
    BiPolyQ g1 = parse_bipoly_q("(Y^2 - X^3)^2 - X^7", Var::Y);
    BiPolyQ f = parse_bipoly_q("Y^2 - X^3", Var::Y);
    BiPolyQ h1 = kuo_resultant(g1, f).h;
    BiPolyQ h1_expected = parse_bipoly_q("T^4 - 2*X^7*T^2 + X^14", Var::T);
    bool h1_ok = h1 == h1_expected && print_poly(h1) == "T^4 - 2*X^7*T^2 + X^14";
    auto pp1 = prime_power_over_series(h1);
    bool pp1_ok = pp1 && pp1->exponent == 2 &&
                  pp1->base == parse_bipoly_q("T^2 - X^7", Var::T) &&
                  dumas_irreducible(pp1->base).irreducible();
    pass = pass && h1_ok && pp1_ok;
    text += "example 1: h = " + print_poly(h1) + "\n";
    if (pp1)
        text += "example 1: prime power base = " + print_poly(pp1->base) +
                ", exponent = " + std::to_string(pp1->exponent) + "\n";
    else
        text += "example 1: prime power none\n";

    json e1;
    e1["h"] = print_poly(h1);
    e1["prime_power"] = pp1 ? json({{"base", print_poly(pp1->base)},
                                    {"exponent", pp1->exponent}})
                            : json(nullptr);
    e1["reproduced"] = h1_ok && pp1_ok;
    doc["result"]["example1"] = e1;

    // Second worked example: g = (Y^2 - X^3)^2 - X^5*Y, same f.
    BiPolyQ g2 = parse_bipoly_q("(Y^2-X^3)^2 - X^5*Y", Var::Y);
    BiPolyQ h2 = kuo_resultant(g2, f).h;
    BiPolyQ h2_expected = parse_bipoly_q("T^4 - X^10*T - X^13", Var::T);
    bool h2_ok = h2 == h2_expected && print_poly(h2) == "T^4 - X^10*T - X^13";
    BiPolyQ init = weighted_initial_part(h2, 4, 13);
    bool init_ok = init == parse_bipoly_q("T^4 - X^13", Var::T);
    IrreducibilityVerdict dv = dumas_irreducible(h2);
    bool dv_ok = dv.irreducible();
    pass = pass && h2_ok && init_ok && dv_ok;
    text += "example 2: h = " + print_poly(h2) + "\n";
    text += "example 2: initial part (4,13) = " + print_poly(init) + "\n";
    text += "example 2: verdict " +
            std::string(dv.irreducible() ? "irreducible" : "inconclusive") + " (" + dv.reason +
            ")\n";

    json e2;
    e2["h"] = print_poly(h2);
    e2["initial_part"] = print_poly(init);
    e2["verdict"] = dv.irreducible() ? "irreducible" : "inconclusive";
    e2["reproduced"] = h2_ok && init_ok && dv_ok;
    doc["result"]["example2"] = e2;

    doc["result"]["pass"] = pass;

    text += pass ? "PASS\n" : "FAIL\n";
    emit(doc, text, json_mode);
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kuores: exact composed resultants, finite-field factorization, "
                 "Newton-polygon certificates, and theorem verification campaigns"};
    app.require_subcommand(1);

    std::string field_str = "q";
    bool json_mode = false;
    uint64_t seed = 0;

    std::string kuo_g, kuo_f;
    auto* kuo_cmd = app.add_subcommand("kuo", "compute h(T) = (-1)^deg g * Res_Y(g, f - T)");
    kuo_cmd->add_option("--g", kuo_g, "monic polynomial g")->required();
    kuo_cmd->add_option("--f", kuo_f, "polynomial f")->required();

    std::string res_a, res_b;
    auto* res_cmd = app.add_subcommand("resultant", "resultant of two polynomials");
    res_cmd->add_option("--a", res_a, "first polynomial")->required();
    res_cmd->add_option("--b", res_b, "second polynomial")->required();

    std::string factor_poly;
    auto* factor_cmd = app.add_subcommand("factor", "factor over a prime field");
    factor_cmd->add_option("--poly", factor_poly, "monic polynomial")->required();

    std::string irred_poly;
    auto* irred_cmd = app.add_subcommand("irred", "irreducibility certificate");
    irred_cmd->add_option("--poly", irred_poly, "monic polynomial")->required();

    std::string newton_poly;
    auto* newton_cmd = app.add_subcommand("newton", "Newton polygon support and vertices");
    newton_cmd->add_option("--poly", newton_poly, "polynomial in X and the main variable")
        ->required();

    std::string init_poly, init_weights;
    auto* init_cmd = app.add_subcommand("initial-part", "weighted initial part");
    init_cmd->add_option("--poly", init_poly, "polynomial in X and the main variable")
        ->required();
    init_cmd->add_option("--weights", init_weights, "weights a,b for w(i,j) = a*i + b*j")
        ->required();

    std::string galois_poly;
    auto* galois_cmd =
        app.add_subcommand("galois", "splitting field, Frobenius orbits, transitivity");
    galois_cmd->add_option("--poly", galois_poly, "monic polynomial")->required();

    std::string verify_theorem;
    uint64_t verify_p = 0;
    int verify_trials = 100, verify_maxdeg = 6;
    auto* verify_cmd = app.add_subcommand("verify", "randomized theorem campaign");
    verify_cmd
        ->add_option("--theorem", verify_theorem,
                     "main | converse | transitivity | product-formula")
        ->required();
    verify_cmd->add_option("--p", verify_p, "prime modulus")->required();
    verify_cmd->add_option("--trials", verify_trials, "number of trials");
    verify_cmd->add_option("--max-deg", verify_maxdeg, "maximum sampled degree");

    auto* examples_cmd =
        app.add_subcommand("examples", "reproduce the two worked examples end to end");

    for (CLI::App* sub : {kuo_cmd, res_cmd, factor_cmd, irred_cmd, newton_cmd, init_cmd,
                          galois_cmd}) {
        sub->add_option("--field", field_str, "coefficient field: q | fp:<p> | qx");
        sub->add_flag("--json", json_mode, "emit the JSON document instead of text");
        sub->add_option("--seed", seed, "seed for randomized subroutines");
    }
    verify_cmd->add_flag("--json", json_mode, "emit the JSON document instead of text");
    verify_cmd->add_option("--seed", seed, "campaign seed");
    examples_cmd->add_flag("--json", json_mode, "emit the JSON document instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (kuo_cmd->parsed())
            return run_kuo(parse_field(field_str), kuo_g, kuo_f, json_mode, seed);
        if (res_cmd->parsed())
            return run_resultant(parse_field(field_str), res_a, res_b, json_mode);
        if (factor_cmd->parsed())
            return run_factor(parse_field(field_str), factor_poly, json_mode, seed);
        if (irred_cmd->parsed())
            return run_irred(parse_field(field_str), irred_poly, json_mode);
        if (newton_cmd->parsed())
            return run_newton(parse_field(field_str), newton_poly, json_mode);
        if (init_cmd->parsed())
            return run_initial_part(parse_field(field_str), init_poly, init_weights, json_mode);
        if (galois_cmd->parsed())
            return run_galois(parse_field(field_str), galois_poly, json_mode, seed);
        if (verify_cmd->parsed())
            return run_verify(verify_theorem, verify_p, verify_trials, verify_maxdeg, seed,
                              json_mode);
        if (examples_cmd->parsed()) return run_examples(json_mode);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.message << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
