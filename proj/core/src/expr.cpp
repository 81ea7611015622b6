#include "kuores/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace kuores {

namespace {

constexpr long kMaxExprDegree = 4096;
constexpr long kMaxExponent = 512;
constexpr int kMaxNesting = 200;

struct Token {
    enum class Kind { Int, Variable, Plus, Minus, Star, Caret, LParen, RParen, End };
    Kind kind;
    size_t pos;          // 1-based
    bool space_before;
    BigInt value;        // Int
    Var var = Var::X;    // Variable
};

std::optional<Var> var_of(char c) {
    switch (c) {
        case 'X': return Var::X;
        case 'Y': return Var::Y;
        case 'Z': return Var::Z;
        case 'T': return Var::T;
        default: return std::nullopt;
    }
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    bool space = false;
    auto push = [&](Token::Kind k, size_t pos) {
        out.push_back(Token{k, pos, space, BigInt(0), Var::X});
        space = false;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            space = true;
            ++i;
            continue;
        }
        size_t pos = i + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            push(Token::Kind::Int, pos);
            out.back().value = BigInt(text.substr(i, j - i), 10);
            i = j;
            continue;
        }
        if (auto v = var_of(c)) {
            push(Token::Kind::Variable, pos);
            out.back().var = *v;
            ++i;
            continue;
        }
        switch (c) {
            case '+': push(Token::Kind::Plus, pos); break;
            case '-': push(Token::Kind::Minus, pos); break;
            case '*': push(Token::Kind::Star, pos); break;
            case '^': push(Token::Kind::Caret, pos); break;
            case '(': push(Token::Kind::LParen, pos); break;
            case ')': push(Token::Kind::RParen, pos); break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
        ++i;
    }
    out.push_back(Token{Token::Kind::End, text.size() + 1, space, BigInt(0), Var::X});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    ExprPtr run() {
        ExprPtr e = expression();
        if (peek().kind != Token::Kind::End)
            throw ParseError("unexpected token after expression", peek().pos);
        return e;
    }

private:
    const Token& peek() const { return t_[i_]; }
    const Token& take() { return t_[i_++]; }

    static ExprPtr node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

    ExprPtr expression() {
        ExprPtr e = term();
        for (;;) {
            Token::Kind k = peek().kind;
            if (k != Token::Kind::Plus && k != Token::Kind::Minus) return e;
            const Token& op = take();
            ExprPtr r = term();
            ExprNode n{k == Token::Kind::Plus ? ExprNode::Kind::Add : ExprNode::Kind::Sub,
                       op.pos, BigInt(0)};
            n.a = e;
            n.b = r;
            e = node(std::move(n));
        }
    }

    static bool opens_atom(Token::Kind k) {
        return k == Token::Kind::Int || k == Token::Kind::Variable || k == Token::Kind::LParen;
    }

    ExprPtr term() {
        ExprPtr e = unary();
        for (;;) {
            const Token& t = peek();
            if (t.kind == Token::Kind::Star) {
                size_t pos = take().pos;
                e = mul_node(e, unary(), pos);
            } else if (opens_atom(t.kind) && t.space_before) {
                // Whitespace juxtaposition: "X^5 Y". A '-' never multiplies,
                // so "2 - 3" stays a subtraction at the expression level.
                size_t pos = t.pos;
                e = mul_node(e, unary(), pos);
            } else {
                return e;
            }
        }
    }

    static ExprPtr mul_node(ExprPtr a, ExprPtr b, size_t pos) {
        ExprNode n{ExprNode::Kind::Mul, pos, BigInt(0)};
        n.a = std::move(a);
        n.b = std::move(b);
        return node(std::move(n));
    }

    ExprPtr unary() {
        if (peek().kind == Token::Kind::Minus) {
            size_t pos = take().pos;
            ExprNode n{ExprNode::Kind::Neg, pos, BigInt(0)};
            n.a = unary();
            return node(std::move(n));
        }
        return postfix();
    }

    ExprPtr postfix() {
        ExprPtr e = primary();
        while (peek().kind == Token::Kind::Caret) {
            size_t pos = take().pos;
            if (peek().kind != Token::Kind::Int)
                throw ParseError("expected a nonnegative integer exponent", peek().pos);
            const Token& t = take();
            if (t.value > kMaxExponent)
                throw ParseError("exponent exceeds limit " + std::to_string(kMaxExponent),
                                 t.pos);
            ExprNode n{ExprNode::Kind::Pow, pos, BigInt(0)};
            n.exponent = static_cast<long>(t.value.get_si());
            n.a = e;
            e = node(std::move(n));
        }
        return e;
    }

    ExprPtr primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Int: {
                take();
                ExprNode n{ExprNode::Kind::Int, t.pos, t.value};
                return node(std::move(n));
            }
            case Token::Kind::Variable: {
                take();
                ExprNode n{ExprNode::Kind::Variable, t.pos, BigInt(0)};
                n.var = t.var;
                return node(std::move(n));
            }
            case Token::Kind::LParen: {
                take();
                if (++depth_ > kMaxNesting)
                    throw ParseError("parentheses nested too deeply", t.pos);
                ExprPtr e = expression();
                if (peek().kind != Token::Kind::RParen)
                    throw ParseError("expected ')'", peek().pos);
                take();
                --depth_;
                return e;
            }
            default:
                throw ParseError("expected a number, variable, or '('", t.pos);
        }
    }

    std::vector<Token> t_;
    size_t i_ = 0;
    int depth_ = 0;
};

// ---------------------------------------------------------------------------
// Evaluation into concrete polynomial domains.
// ---------------------------------------------------------------------------

struct QDomain {
    Var main;
    using V = Poly<Rational>;
    V from_int(const BigInt& n) const { return V::constant(main, Rational(n)); }
    V var_value(Var v, size_t pos) const {
        if (v != main)
            throw ParseError(std::string("variable ") + var_name(v) + " not allowed here", pos);
        return V::monomial(main, Rational(1), 1);
    }
    static long degree_of(const V& x) { return x.degree(); }
};

struct FpDomain {
    Var main;
    PrimeField field;
    using V = Poly<Fp>;
    V from_int(const BigInt& n) const { return V::constant(main, field.from_bigint(n)); }
    V var_value(Var v, size_t pos) const {
        if (v != main)
            throw ParseError(std::string("variable ") + var_name(v) + " not allowed here", pos);
        return V::monomial(main, field.one(), 1);
    }
    static long degree_of(const V& x) { return x.degree(); }
};

template <class S>
long bi_degree(const Poly<Poly<S>>& x) {
    long inner = 0;
    for (size_t j = 0; j < x.size(); ++j)
        if (!x[j].is_zero()) inner = std::max(inner, static_cast<long>(x[j].degree()));
    return static_cast<long>(x.degree()) + inner;
}

struct BiQDomain {
    Var main;
    using V = BiPolyQ;
    V from_int(const BigInt& n) const {
        return V::constant(main, Poly<Rational>::constant(Var::X, Rational(n)));
    }
    V var_value(Var v, size_t pos) const {
        if (v == Var::X)
            return V::constant(main, Poly<Rational>::monomial(Var::X, Rational(1), 1));
        if (v == main)
            return V::monomial(main, Poly<Rational>::constant(Var::X, Rational(1)), 1);
        throw ParseError(std::string("variable ") + var_name(v) + " not allowed here", pos);
    }
    static long degree_of(const V& x) { return bi_degree(x); }
};

struct BiFpDomain {
    Var main;
    PrimeField field;
    using V = Poly<Poly<Fp>>;
    V from_int(const BigInt& n) const {
        return V::constant(main, Poly<Fp>::constant(Var::X, field.from_bigint(n)));
    }
    V var_value(Var v, size_t pos) const {
        if (v == Var::X)
            return V::constant(main, Poly<Fp>::monomial(Var::X, field.one(), 1));
        if (v == main)
            return V::monomial(main, Poly<Fp>::constant(Var::X, field.one()), 1);
        throw ParseError(std::string("variable ") + var_name(v) + " not allowed here", pos);
    }
    static long degree_of(const V& x) { return bi_degree(x); }
};

template <class D>
typename D::V ev(const ExprNode& n, const D& d) {
    using V = typename D::V;
    switch (n.kind) {
        case ExprNode::Kind::Int:
            return d.from_int(n.value);
        case ExprNode::Kind::Variable:
            return d.var_value(n.var, n.pos);
        case ExprNode::Kind::Neg:
            return -ev(*n.a, d);
        case ExprNode::Kind::Add:
            return ev(*n.a, d) + ev(*n.b, d);
        case ExprNode::Kind::Sub:
            return ev(*n.a, d) - ev(*n.b, d);
        case ExprNode::Kind::Mul: {
            V x = ev(*n.a, d) * ev(*n.b, d);
            if (D::degree_of(x) > kMaxExprDegree)
                throw ParseError("expansion degree exceeds limit", n.pos);
            return x;
        }
        case ExprNode::Kind::Pow: {
            V base = ev(*n.a, d);
            if (n.exponent == 0) return d.from_int(BigInt(1));
            long db = D::degree_of(base);
            if (db > 0 && db * n.exponent > kMaxExprDegree)
                throw ParseError("expansion degree exceeds limit", n.pos);
            return pow_poly(base, static_cast<uint64_t>(n.exponent));
        }
    }
    throw Error("internal: unknown expression node");
}

void collect_vars(const ExprNode& n, bool seen[4]) {
    if (n.kind == ExprNode::Kind::Variable) seen[static_cast<size_t>(n.var)] = true;
    if (n.a) collect_vars(*n.a, seen);
    if (n.b) collect_vars(*n.b, seen);
}

// ---------------------------------------------------------------------------
// Printing.
// ---------------------------------------------------------------------------

bool scalar_neg(const Rational& c) { return c.sign() < 0; }
bool scalar_neg(const Fp&) { return false; }
Rational scalar_abs(const Rational& c) { return c.abs(); }
Fp scalar_abs(const Fp& c) { return c; }

std::string pow_str(Var v, int k) {
    std::string s = var_name(v);
    if (k >= 2) {
        s += '^';
        s += std::to_string(k);
    }
    return s;
}

void append_sign(std::string& out, bool& first, bool neg) {
    if (first) {
        if (neg) out += '-';
        first = false;
    } else {
        out += neg ? " - " : " + ";
    }
}

template <class S>
std::string print_uni_impl(const Poly<S>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const S& c = p[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        bool neg = scalar_neg(c);
        S mag = scalar_abs(c);
        append_sign(out, first, neg);
        if (k == 0) {
            out += mag.to_string();
        } else {
            if (!mag.is_one()) {
                out += mag.to_string();
                out += '*';
            }
            out += pow_str(p.var(), k);
        }
    }
    return out;
}

template <class S>
std::string print_bi_impl(const Poly<Poly<S>>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int j = p.degree(); j >= 0; --j) {
        const Poly<S>& cj = p[static_cast<size_t>(j)];
        if (cj.is_zero()) continue;
        int terms = 0, only_i = -1;
        for (int i = 0; i <= cj.degree(); ++i) {
            if (!cj[static_cast<size_t>(i)].is_zero()) {
                ++terms;
                only_i = i;
            }
        }
        if (terms == 1) {
            const S& c = cj[static_cast<size_t>(only_i)];
            bool neg = scalar_neg(c);
            S mag = scalar_abs(c);
            append_sign(out, first, neg);
            std::string piece;
            if (!mag.is_one() || (only_i == 0 && j == 0)) piece = mag.to_string();
            if (only_i > 0) {
                if (!piece.empty()) piece += '*';
                piece += pow_str(cj.var(), only_i);
            }
            if (j > 0) {
                if (!piece.empty()) piece += '*';
                piece += pow_str(p.var(), j);
            }
            out += piece;
        } else {
            append_sign(out, first, false);
            out += '(';
            out += print_uni_impl(cj);
            out += ')';
            if (j > 0) {
                out += '*';
                out += pow_str(p.var(), j);
            }
        }
    }
    return out;
}

} // namespace

ExprPtr parse_expr(const std::string& text) {
    if (text.empty())
        throw ParseError("empty input", 1);
    return Parser(lex(text)).run();
}

std::vector<Var> used_vars(const ExprPtr& e) {
    bool seen[4] = {false, false, false, false};
    if (e) collect_vars(*e, seen);
    std::vector<Var> out;
    for (size_t i = 0; i < 4; ++i)
        if (seen[i]) out.push_back(static_cast<Var>(i));
    return out;
}

Poly<Rational> to_poly_q(const ExprPtr& e, Var main) { return ev(*e, QDomain{main}); }
Poly<Fp> to_poly_fp(const ExprPtr& e, Var main, uint64_t p) {
    return ev(*e, FpDomain{main, PrimeField(p)});
}
BiPolyQ to_bipoly_q(const ExprPtr& e, Var main) { return ev(*e, BiQDomain{main}); }
Poly<Poly<Fp>> to_bipoly_fp(const ExprPtr& e, Var main, uint64_t p) {
    return ev(*e, BiFpDomain{main, PrimeField(p)});
}

Poly<Rational> parse_poly_q(const std::string& text, Var main) {
    return to_poly_q(parse_expr(text), main);
}
Poly<Fp> parse_poly_fp(const std::string& text, Var main, uint64_t p) {
    return to_poly_fp(parse_expr(text), main, p);
}
BiPolyQ parse_bipoly_q(const std::string& text, Var main) {
    return to_bipoly_q(parse_expr(text), main);
}
Poly<Poly<Fp>> parse_bipoly_fp(const std::string& text, Var main, uint64_t p) {
    return to_bipoly_fp(parse_expr(text), main, p);
}

std::string print_poly(const Poly<Rational>& p) { return print_uni_impl(p); }
std::string print_poly(const Poly<Fp>& p) { return print_uni_impl(p); }
std::string print_poly(const Poly<Poly<Rational>>& p) { return print_bi_impl(p); }
std::string print_poly(const Poly<Poly<Fp>>& p) { return print_bi_impl(p); }

std::string print_fq(const FqElem& e) { return print_uni_impl(e.rep()); }

} // namespace kuores
