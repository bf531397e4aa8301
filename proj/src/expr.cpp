#include "derivkit/expr.hpp"

#include <cctype>
#include <utility>

namespace derivkit {

namespace {

struct Token {
    enum class Kind { Int, Var, Id, D, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    Rational value;   // Kind::Int
    unsigned column;  // 1-based
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        unsigned col = static_cast<unsigned>(pos_) + 1;
        if (pos_ >= text_.size()) return {Token::Kind::End, Rational(0), col};
        char c = text_[pos_];
        switch (c) {
            case '+': ++pos_; return {Token::Kind::Plus, Rational(0), col};
            case '-': ++pos_; return {Token::Kind::Minus, Rational(0), col};
            case '*': ++pos_; return {Token::Kind::Star, Rational(0), col};
            case '/': ++pos_; return {Token::Kind::Slash, Rational(0), col};
            case '^': ++pos_; return {Token::Kind::Caret, Rational(0), col};
            case '(': ++pos_; return {Token::Kind::LParen, Rational(0), col};
            case ')': ++pos_; return {Token::Kind::RParen, Rational(0), col};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return {Token::Kind::Int, rational_from_string(text_.substr(start, pos_ - start)), col};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string word = text_.substr(start, pos_ - start);
            if (word == "t" || word == "x") return {Token::Kind::Var, Rational(0), col};
            if (word == "id") return {Token::Kind::Id, Rational(0), col};
            if (word == "D") return {Token::Kind::D, Rational(0), col};
            throw ParseError(col, "unknown name '" + word + "'");
        }
        throw ParseError(col, std::string("unexpected character '") + c + "'");
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { advance(); }

    Expr parse() {
        Expr e = expr();
        if (cur_.kind != Token::Kind::End) throw ParseError(cur_.column, "trailing input");
        return e;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    Expr expr() {
        bool negate = false;
        if (cur_.kind == Token::Kind::Plus) {
            advance();
        } else if (cur_.kind == Token::Kind::Minus) {
            negate = true;
            advance();
        }
        Expr lhs = term();
        if (negate) lhs = unary(Expr::Kind::Neg, std::move(lhs));
        for (;;) {
            if (cur_.kind == Token::Kind::Plus) {
                advance();
                lhs = binary(Expr::Kind::Add, std::move(lhs), term());
            } else if (cur_.kind == Token::Kind::Minus) {
                advance();
                lhs = binary(Expr::Kind::Sub, std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }

    Expr term() {
        Expr lhs = factor();
        for (;;) {
            if (cur_.kind == Token::Kind::Star) {
                advance();
                lhs = binary(Expr::Kind::Mul, std::move(lhs), factor());
            } else if (cur_.kind == Token::Kind::Slash) {
                advance();
                lhs = binary(Expr::Kind::Div, std::move(lhs), factor());
            } else {
                return lhs;
            }
        }
    }

    Expr factor() {
        Expr base = atom();
        if (cur_.kind == Token::Kind::Caret) {
            advance();
            if (cur_.kind != Token::Kind::Int) {
                throw ParseError(cur_.column, "expected nonnegative integer exponent");
            }
            Expr p;
            p.kind = Expr::Kind::Pow;
            p.exponent = static_cast<unsigned>(cur_.value.get_num().get_ui());
            p.kids.push_back(std::move(base));
            advance();
            return p;
        }
        return base;
    }

    Expr atom() {
        Expr e;
        switch (cur_.kind) {
            case Token::Kind::Int:
                e.kind = Expr::Kind::Literal;
                e.literal = cur_.value;
                advance();
                return e;
            case Token::Kind::Var:
                e.kind = Expr::Kind::Var;
                advance();
                return e;
            case Token::Kind::Id:
                e.kind = Expr::Kind::Id;
                advance();
                return e;
            case Token::Kind::D:
                e.kind = Expr::Kind::D;
                advance();
                return e;
            case Token::Kind::LParen: {
                advance();
                Expr inner = expr();
                if (cur_.kind != Token::Kind::RParen) throw ParseError(cur_.column, "expected ')'");
                advance();
                return inner;
            }
            default:
                throw ParseError(cur_.column, "expected a value");
        }
    }

    static Expr unary(Expr::Kind k, Expr kid) {
        Expr e;
        e.kind = k;
        e.kids.push_back(std::move(kid));
        return e;
    }

    static Expr binary(Expr::Kind k, Expr lhs, Expr rhs) {
        Expr e;
        e.kind = k;
        e.kids.push_back(std::move(lhs));
        e.kids.push_back(std::move(rhs));
        return e;
    }

    Lexer lexer_;
    Token cur_;
};

bool is_pure_d(const OperatorFunc& f) {
    return f.id_coeff().is_zero() && f.deriv_coeffs().size() == 1 &&
           f.deriv_coeffs().count(1) == 1 && f.coeff(1) == RatFunc::one();
}

bool is_pure_id(const OperatorFunc& f) {
    return f.deriv_coeffs().empty() && f.id_coeff() == RatFunc::one();
}

ExprValue elab_pow(const Expr& e) {
    ExprValue base = elaborate(e.kids[0]);
    unsigned m = e.exponent;
    if (std::holds_alternative<RatFunc>(base)) {
        RatFunc acc = RatFunc::one();
        const RatFunc& b = std::get<RatFunc>(base);
        for (unsigned i = 0; i < m; ++i) acc = acc * b;
        return acc;
    }
    const OperatorFunc& f = std::get<OperatorFunc>(base);
    if (is_pure_d(f)) {
        if (m == 0) return OperatorFunc::scaled_identity(RatFunc::one());
        return OperatorFunc::derivation_term(m, RatFunc::one());
    }
    if (is_pure_id(f)) return f;
    throw ElabError("only 'D' and 'id' may be raised to an operator power");
}

}  // namespace

Expr parse_expr(const std::string& text) {
    return Parser(text).parse();
}

ExprValue elaborate(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Literal:
            return RatFunc(e.literal);
        case Expr::Kind::Var:
            return RatFunc::t();
        case Expr::Kind::Id:
            return OperatorFunc::scaled_identity(RatFunc::one());
        case Expr::Kind::D:
            return OperatorFunc::derivation_term(1, RatFunc::one());
        case Expr::Kind::Neg: {
            ExprValue v = elaborate(e.kids[0]);
            if (std::holds_alternative<RatFunc>(v)) return -std::get<RatFunc>(v);
            return std::get<OperatorFunc>(v).scaled(RatFunc(Rational(-1)));
        }
        case Expr::Kind::Pow:
            return elab_pow(e);
        case Expr::Kind::Add:
        case Expr::Kind::Sub: {
            ExprValue a = elaborate(e.kids[0]);
            ExprValue b = elaborate(e.kids[1]);
            bool sub = e.kind == Expr::Kind::Sub;
            if (std::holds_alternative<RatFunc>(a) && std::holds_alternative<RatFunc>(b)) {
                const auto& x = std::get<RatFunc>(a);
                const auto& y = std::get<RatFunc>(b);
                return sub ? x - y : x + y;
            }
            if (std::holds_alternative<OperatorFunc>(a) && std::holds_alternative<OperatorFunc>(b)) {
                const auto& x = std::get<OperatorFunc>(a);
                const auto& y = std::get<OperatorFunc>(b);
                return sub ? x - y : x + y;
            }
            throw ElabError("cannot mix scalar and operator in '+'/'-'");
        }
        case Expr::Kind::Mul: {
            ExprValue a = elaborate(e.kids[0]);
            ExprValue b = elaborate(e.kids[1]);
            if (std::holds_alternative<RatFunc>(a) && std::holds_alternative<RatFunc>(b)) {
                return std::get<RatFunc>(a) * std::get<RatFunc>(b);
            }
            if (std::holds_alternative<RatFunc>(a)) {
                return std::get<OperatorFunc>(b).scaled(std::get<RatFunc>(a));
            }
            if (std::holds_alternative<RatFunc>(b)) {
                return std::get<OperatorFunc>(a).scaled(std::get<RatFunc>(b));
            }
            throw ElabError("operator composition is not supported; write D^k");
        }
        case Expr::Kind::Div: {
            ExprValue a = elaborate(e.kids[0]);
            ExprValue b = elaborate(e.kids[1]);
            if (!std::holds_alternative<RatFunc>(b)) throw ElabError("cannot divide by an operator");
            const RatFunc& y = std::get<RatFunc>(b);
            if (y.is_zero()) throw ElabError("division by zero");
            if (std::holds_alternative<RatFunc>(a)) return std::get<RatFunc>(a) / y;
            return std::get<OperatorFunc>(a).scaled(y.inv());
        }
    }
    throw ElabError("malformed expression tree");
}

RatFunc parse_scalar(const std::string& text) {
    ExprValue v = elaborate(parse_expr(text));
    if (!std::holds_alternative<RatFunc>(v)) throw ElabError("expected a scalar expression");
    return std::get<RatFunc>(v);
}

OperatorFunc parse_operator(const std::string& text) {
    ExprValue v = elaborate(parse_expr(text));
    if (std::holds_alternative<OperatorFunc>(v)) return std::get<OperatorFunc>(v);
    // A scalar zero also names the zero operator.
    if (std::get<RatFunc>(v).is_zero()) return OperatorFunc::zero();
    throw ElabError("expected an operator expression");
}

std::string render_poly(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t d = p.coeffs().size(); d-- > 0;) {
        Rational c = p.coeff(d);
        if (c == 0) continue;
        bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational m = rational_abs(c);
        if (d == 0) {
            out += to_string(m);
        } else {
            if (m != 1) out += to_string(m) + "*";
            out += var;
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

std::string render(const RatFunc& u, const std::string& var) {
    if (u.den() == Poly::one()) return render_poly(u.num(), var);
    return "(" + render_poly(u.num(), var) + ")/(" + render_poly(u.den(), var) + ")";
}

namespace {

// Coefficient-times-symbol term; constant rational coefficients fold their
// sign into the joiner, everything else is parenthesized.
void append_term(std::string& out, const RatFunc& c, const std::string& symbol) {
    bool first = out.empty();
    if (c.is_constant()) {
        Rational r = c.constant_value();
        bool neg = r < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational m = rational_abs(r);
        if (m == 1) {
            out += symbol;
        } else if (m.get_den() == 1) {
            out += to_string(m) + "*" + symbol;
        } else {
            out += "(" + to_string(m) + ")*" + symbol;
        }
        return;
    }
    if (!first) out += " + ";
    out += "(" + render(c) + ")*" + symbol;
}

}  // namespace

std::string render(const OperatorFunc& f) {
    if (f.is_zero()) return "0*id";
    std::string out;
    if (!f.id_coeff().is_zero()) append_term(out, f.id_coeff(), "id");
    for (const auto& [k, c] : f.deriv_coeffs()) {
        append_term(out, c, k == 1 ? "D" : "D^" + std::to_string(k));
    }
    return out;
}

}  // namespace derivkit
