#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "kuores/numeric.hpp"
#include "kuores/poly.hpp"
#include "kuores/rng.hpp"

namespace kuores::testutil {

inline Poly<Rational> random_poly_q(Var v, int max_deg, Rng& rng) {
    int d = static_cast<int>(rng.range(0, max_deg));
    std::vector<Rational> cs;
    cs.reserve(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) cs.emplace_back(rng.range(-9, 9));
    return Poly<Rational>(v, std::move(cs));
}

inline Poly<Rational> random_nonzero_q(Var v, int max_deg, Rng& rng) {
    for (;;) {
        Poly<Rational> a = random_poly_q(v, max_deg, rng);
        if (!a.is_zero()) return a;
    }
}

inline Poly<Fp> random_poly_fp(Var v, int max_deg, uint64_t p, Rng& rng) {
    int d = static_cast<int>(rng.range(0, max_deg));
    std::vector<Fp> cs;
    cs.reserve(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) cs.push_back(Fp{rng.below(p), p});
    return Poly<Fp>(v, std::move(cs));
}

inline Poly<Fp> random_nonzero_fp(Var v, int max_deg, uint64_t p, Rng& rng) {
    for (;;) {
        Poly<Fp> a = random_poly_fp(v, max_deg, p, rng);
        if (!a.is_zero()) return a;
    }
}

struct CliResult {
    int exit_code;
    std::string out;
};

inline std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    }
    q += "'";
    return q;
}

inline CliResult run_cli(const std::string& bin, const std::vector<std::string>& args) {
    std::string cmd = shell_quote(bin);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) throw std::runtime_error("popen failed for: " + cmd);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
    int st = pclose(f);
    int code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return {code, out};
}

} // namespace kuores::testutil
