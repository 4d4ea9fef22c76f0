#pragma once

// Expression language for eta and Pochhammer products:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ['-'] INT)*        exponents fold right: x^2^3 = x^8
//   atom   := 'eta(' INT ')' | 'poch(' INT ',' INT ')' | 'q' | INT | '(' expr ')'
//
// eta(k) is eta(k tau) = q^(k/24) (q^k;q^k)_inf; poch(a,b) is (q^a;q^b)_inf.

#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hauptq/error.hpp"
#include "hauptq/eta.hpp"
#include "hauptq/series.hpp"

namespace hauptq {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct EtaAtom {
    std::int64_t k;
};
struct Poch {
    std::int64_t a, b;
};
struct IntLit {
    BigInt value; // nonnegative; negative constants are Negate(IntLit)
};
struct QVar {};
enum class BinOp { Add, Sub, Mul, Div };
struct Binary {
    BinOp op;
    ExprPtr lhs, rhs;
};
struct Power {
    ExprPtr base;
    std::int64_t exponent;
};
struct Negate {
    ExprPtr operand;
};

struct Expr {
    std::variant<EtaAtom, Poch, IntLit, QVar, Binary, Power, Negate> node;
};

namespace ex {

inline ExprPtr make(auto node) { return std::make_shared<const Expr>(Expr{std::move(node)}); }
inline ExprPtr eta(std::int64_t k) { return make(EtaAtom{k}); }
inline ExprPtr poch(std::int64_t a, std::int64_t b) { return make(Poch{a, b}); }
inline ExprPtr lit(const BigInt& v) { return make(IntLit{v}); }
inline ExprPtr q() { return make(QVar{}); }
inline ExprPtr bin(BinOp op, ExprPtr l, ExprPtr r) { return make(Binary{op, std::move(l), std::move(r)}); }
inline ExprPtr pow(ExprPtr b, std::int64_t e) { return make(Power{std::move(b), e}); }
inline ExprPtr neg(ExprPtr e) { return make(Negate{std::move(e)}); }

} // namespace ex

inline bool operator==(const Expr& a, const Expr& b);

inline bool same(const ExprPtr& a, const ExprPtr& b) { return a == b || (a && b && *a == *b); }

inline bool operator==(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, EtaAtom>) return x.k == y.k;
            else if constexpr (std::is_same_v<T, Poch>) return x.a == y.a && x.b == y.b;
            else if constexpr (std::is_same_v<T, IntLit>) return x.value == y.value;
            else if constexpr (std::is_same_v<T, QVar>) return true;
            else if constexpr (std::is_same_v<T, Binary>) return x.op == y.op && same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
            else if constexpr (std::is_same_v<T, Power>) return x.exponent == y.exponent && same(x.base, y.base);
            else return same(x.operand, y.operand);
        },
        a.node);
}

// -- parsing --------------------------------------------------------------

namespace detail {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
};

inline std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Int, start, std::string(s.substr(start, i - start))});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Ident, start, std::string(s.substr(start, i - start))});
            continue;
        }
        Tok k;
        switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case ',': k = Tok::Comma; break;
        default: throw parse_error(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({k, start, std::string(1, c)});
        ++i;
    }
    out.push_back({Tok::End, s.size(), ""});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view s) : toks_(lex(s)) {}

    ExprPtr parse_all() {
        ExprPtr e = expr();
        if (peek().kind != Tok::End) fail({"operator", "end of input"});
        return e;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++i_;
        return true;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const auto& t = peek();
        const std::string what = t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'";
        throw parse_error(what, t.pos, std::move(expected));
    }

    void expect(Tok k, const char* name) {
        if (!accept(k)) fail({name});
    }

    std::int64_t small_int(bool positive) {
        const auto& t = peek();
        if (t.kind != Tok::Int) fail({"integer literal"});
        if (t.text.size() > 18) throw parse_error("integer literal '" + t.text + "' is too large here", t.pos);
        const std::int64_t v = std::stoll(t.text);
        if (positive && v < 1) throw parse_error("expected a positive integer", t.pos, {"positive integer literal"});
        ++i_;
        return v;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (accept(Tok::Plus)) e = ex::bin(BinOp::Add, e, term());
            else if (accept(Tok::Minus)) e = ex::bin(BinOp::Sub, e, term());
            else return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = unary();
        for (;;) {
            if (accept(Tok::Star)) e = ex::bin(BinOp::Mul, e, unary());
            else if (accept(Tok::Slash)) e = ex::bin(BinOp::Div, e, unary());
            else return e;
        }
    }

    ExprPtr unary() {
        if (accept(Tok::Minus)) return ex::neg(unary());
        return power();
    }

    std::int64_t exponent() {
        const bool negative = accept(Tok::Minus);
        const std::int64_t v = small_int(false);
        return negative ? -v : v;
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (!accept(Tok::Caret)) return base;
        std::vector<std::pair<std::int64_t, std::size_t>> chain;
        chain.emplace_back(exponent(), toks_[i_ - 1].pos);
        while (accept(Tok::Caret)) chain.emplace_back(exponent(), toks_[i_ - 1].pos);
        // a^b^c = a^(b^c); with literal exponents the tower must itself be an integer
        std::int64_t e = chain.back().first;
        for (std::size_t j = chain.size() - 1; j-- > 0;) {
            const std::int64_t b = chain[j].first;
            if (e < 0 && b != 1 && b != -1)
                throw parse_error("exponent tower is not an integer", chain[j + 1].second, {"nonnegative exponent"});
            BigInt r;
            if (e < 0) r = (b == -1 && (-e) % 2 == 1) ? -1 : 1;
            else mpz_pow_ui(r.get_mpz_t(), BigInt(static_cast<long>(b)).get_mpz_t(), static_cast<unsigned long>(e));
            if (!r.fits_slong_p() || mpz_cmpabs_ui(r.get_mpz_t(), 1000000000ul) > 0)
                throw parse_error("exponent tower is too large", chain[j].second);
            e = r.get_si();
        }
        return ex::pow(base, e);
    }

    ExprPtr atom() {
        const auto& t = peek();
        switch (t.kind) {
        case Tok::Int: {
            ++i_;
            BigInt v;
            v.set_str(t.text, 10);
            return ex::lit(v);
        }
        case Tok::LParen: {
            ++i_;
            ExprPtr e = expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        case Tok::Ident:
            if (t.text == "q") {
                ++i_;
                return ex::q();
            }
            if (t.text == "eta") {
                ++i_;
                expect(Tok::LParen, "'('");
                const std::int64_t k = small_int(true);
                expect(Tok::RParen, "')'");
                return ex::eta(k);
            }
            if (t.text == "poch") {
                ++i_;
                expect(Tok::LParen, "'('");
                const std::int64_t a = small_int(true);
                expect(Tok::Comma, "','");
                const std::int64_t b = small_int(true);
                expect(Tok::RParen, "')'");
                return ex::poch(a, b);
            }
            throw parse_error("unknown name '" + t.text + "'", t.pos, {"eta", "poch", "q"});
        default: fail({"eta", "poch", "q", "integer literal", "'('"});
        }
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

} // namespace detail

inline ExprPtr parse_expr(std::string_view text) { return detail::Parser(text).parse_all(); }

// -- formatting -----------------------------------------------------------

namespace detail {

inline int precedence(const Expr& e) {
    if (const auto* b = std::get_if<Binary>(&e.node)) return (b->op == BinOp::Add || b->op == BinOp::Sub) ? 1 : 2;
    if (std::holds_alternative<Negate>(e.node)) return 3;
    if (std::holds_alternative<Power>(e.node)) return 4;
    return 5;
}

inline void format_into(const Expr& e, std::string& out);

inline void format_wrapped(const Expr& e, bool wrap, std::string& out) {
    if (wrap) out += '(';
    format_into(e, out);
    if (wrap) out += ')';
}

inline void format_into(const Expr& e, std::string& out) {
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, EtaAtom>) out += "eta(" + std::to_string(x.k) + ")";
            else if constexpr (std::is_same_v<T, Poch>)
                out += "poch(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
            else if constexpr (std::is_same_v<T, IntLit>) out += x.value.get_str();
            else if constexpr (std::is_same_v<T, QVar>) out += "q";
            else if constexpr (std::is_same_v<T, Binary>) {
                const int p = (x.op == BinOp::Add || x.op == BinOp::Sub) ? 1 : 2;
                format_wrapped(*x.lhs, precedence(*x.lhs) < p, out);
                out += "+-*/"[static_cast<int>(x.op)];
                format_wrapped(*x.rhs, precedence(*x.rhs) <= p, out);
            } else if constexpr (std::is_same_v<T, Power>) {
                format_wrapped(*x.base, precedence(*x.base) < 5, out);
                out += "^" + std::to_string(x.exponent);
            } else {
                out += '-';
                format_wrapped(*x.operand, precedence(*x.operand) < 3, out);
            }
        },
        e.node);
}

} // namespace detail

inline std::string format(const Expr& e) {
    std::string out;
    detail::format_into(e, out);
    return out;
}

inline std::string format(const ExprPtr& e) { return format(*e); }

// -- evaluation -----------------------------------------------------------

namespace detail {

inline FractionalSeries eval_at(const Expr& e, std::int64_t prec) {
    return std::visit(
        [&](const auto& x) -> FractionalSeries {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, EtaAtom>) return expand_eta(x.k, prec);
            else if constexpr (std::is_same_v<T, Poch>) return FractionalSeries(pochhammer(x.a, x.b, prec));
            else if constexpr (std::is_same_v<T, IntLit>) return FractionalSeries(LaurentSeries::constant(x.value, prec));
            else if constexpr (std::is_same_v<T, QVar>) return FractionalSeries(LaurentSeries::monomial(1, 1, prec));
            else if constexpr (std::is_same_v<T, Binary>) {
                const FractionalSeries l = eval_at(*x.lhs, prec);
                const FractionalSeries r = eval_at(*x.rhs, prec);
                switch (x.op) {
                case BinOp::Add: return l + r;
                case BinOp::Sub: return l - r;
                case BinOp::Mul: return l * r;
                case BinOp::Div:
                    try {
                        return l / r;
                    } catch (const non_invertible_error& err) {
                        throw evaluation_error(std::string("cannot divide by ") + format(*x.rhs) + ": " + err.what());
                    }
                }
                throw evaluation_error("bad operator");
            } else if constexpr (std::is_same_v<T, Power>) {
                try {
                    return pow(eval_at(*x.base, prec), x.exponent);
                } catch (const non_invertible_error& err) {
                    throw evaluation_error(std::string("cannot invert ") + format(*x.base) + ": " + err.what());
                }
            } else
                return -eval_at(*x.operand, prec);
        },
        e.node);
}

} // namespace detail

// Evaluates e so that the result is known below q^prec where possible. Leaf
// series start at precision prec; if negative shifts and divisions lose
// ground, the evaluation is repeated with the loss added back and truncated.
inline FractionalSeries evaluate(const Expr& e, std::int64_t prec) {
    if (prec < 0) throw domain_error("negative precision");
    std::int64_t work = prec;
    FractionalSeries r = detail::eval_at(e, work);
    for (int attempt = 0; attempt < 4 && r.body().precision() < prec; ++attempt) {
        const std::int64_t loss = prec - r.body().precision();
        work += loss;
        r = detail::eval_at(e, work);
    }
    if (r.body().precision() > prec) r = FractionalSeries(r.offset24(), r.body().truncated(prec));
    return r;
}

inline FractionalSeries evaluate(const ExprPtr& e, std::int64_t prec) { return evaluate(*e, prec); }

} // namespace hauptq
