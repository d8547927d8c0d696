#include "seqblocks/parser.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace seqblocks {

namespace {

constexpr std::int64_t kMaxExponent = 512;
constexpr std::int64_t kMaxModulus = 100000;

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Semi, Comma, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= src_.size()) return {Tok::End, start, ""};
        char c = src_[pos_];
        switch (c) {
            case '+': ++pos_; return {Tok::Plus, start, "+"};
            case '-': ++pos_; return {Tok::Minus, start, "-"};
            case '*': ++pos_; return {Tok::Star, start, "*"};
            case '/': ++pos_; return {Tok::Slash, start, "/"};
            case '^': ++pos_; return {Tok::Caret, start, "^"};
            case '(': ++pos_; return {Tok::LParen, start, "("};
            case ')': ++pos_; return {Tok::RParen, start, ")"};
            case ';': ++pos_; return {Tok::Semi, start, ";"};
            case ',': ++pos_; return {Tok::Comma, start, ","};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
            if (end < src_.size() && src_[end] == '.') {
                std::size_t frac = end + 1;
                while (frac < src_.size() && std::isdigit(static_cast<unsigned char>(src_[frac])))
                    ++frac;
                if (frac == end + 1) throw ParseError(end, "digits expected after decimal point");
                end = frac;
            }
            std::string text(src_.substr(pos_, end - pos_));
            pos_ = end;
            return {Tok::Number, start, std::move(text)};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
                ++end;
            std::string text(src_.substr(pos_, end - pos_));
            pos_ = end;
            return {Tok::Ident, start, std::move(text)};
        }
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }

  private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

struct Monomial {
    Rat coeff;
    std::int64_t exp;
};

// Value of a subtree built only from numbers, 'n', '-', '*', '/', '^',
// i.e. of the shape coeff * n^exp. Division/power subnodes inside such a
// subtree were already validated when they were parsed.
std::optional<Monomial> monomial_shape(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Number: return Monomial{e.number, 0};
        case Expr::Kind::Index: return Monomial{Rat(1), 1};
        case Expr::Kind::Neg: {
            auto m = monomial_shape(*e.lhs);
            if (m) m->coeff = -m->coeff;
            return m;
        }
        case Expr::Kind::Mul: {
            auto a = monomial_shape(*e.lhs), b = monomial_shape(*e.rhs);
            if (!a || !b) return std::nullopt;
            return Monomial{Rat(a->coeff * b->coeff), a->exp + b->exp};
        }
        case Expr::Kind::Div: {
            auto a = monomial_shape(*e.lhs), b = monomial_shape(*e.rhs);
            if (!a || !b) return std::nullopt;
            return Monomial{Rat(a->coeff / b->coeff), a->exp - b->exp};
        }
        case Expr::Kind::Pow: {
            auto a = monomial_shape(*e.lhs);
            if (!a) return std::nullopt;
            return Monomial{rat_pow(a->coeff, e.pow_exp), a->exp * e.pow_exp};
        }
        default: return std::nullopt;
    }
}

// Constant fold for '^' exponents: defined iff the subtree mentions neither
// the index nor any builtin.
std::optional<Rat> const_value(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Number: return e.number;
        case Expr::Kind::Neg: {
            auto v = const_value(*e.lhs);
            return v ? std::optional<Rat>(-*v) : std::nullopt;
        }
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
        case Expr::Kind::Mul:
        case Expr::Kind::Div: {
            auto a = const_value(*e.lhs), b = const_value(*e.rhs);
            if (!a || !b) return std::nullopt;
            switch (e.kind) {
                case Expr::Kind::Add: return Rat(*a + *b);
                case Expr::Kind::Sub: return Rat(*a - *b);
                case Expr::Kind::Mul: return Rat(*a * *b);
                default: return Rat(*a / *b);
            }
        }
        case Expr::Kind::Pow: {
            auto a = const_value(*e.lhs);
            return a ? std::optional<Rat>(rat_pow(*a, e.pow_exp)) : std::nullopt;
        }
        default: return std::nullopt;
    }
}

class Parser {
  public:
    explicit Parser(std::string_view src) : lex_(src) { advance(); }

    ExprPtr parse_all() {
        ExprPtr e = parse_expr();
        if (tok_.kind != Tok::End)
            throw ParseError(tok_.offset, "unexpected trailing input", "end of input");
        return e;
    }

  private:
    Lexer lex_;
    Token tok_;

    void advance() { tok_ = lex_.next(); }

    Token expect(Tok kind, const std::string& what) {
        if (tok_.kind != kind)
            throw ParseError(tok_.offset, "expected " + what, what);
        Token t = tok_;
        advance();
        return t;
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
            auto k = tok_.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
            std::size_t off = tok_.offset;
            advance();
            e = Expr::make_binary(k, e, parse_term(), off);
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        while (tok_.kind == Tok::Star || tok_.kind == Tok::Slash) {
            bool div = tok_.kind == Tok::Slash;
            std::size_t off = tok_.offset;
            advance();
            ExprPtr rhs = parse_factor();
            if (div) check_divisor(*rhs);
            e = Expr::make_binary(div ? Expr::Kind::Div : Expr::Kind::Mul, e, rhs, off);
        }
        return e;
    }

    ExprPtr parse_factor() {
        if (tok_.kind == Tok::Minus) {
            std::size_t off = tok_.offset;
            advance();
            return Expr::make_unary(Expr::Kind::Neg, parse_factor(), off);
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        while (tok_.kind == Tok::Caret) {
            std::size_t off = tok_.offset;
            advance();
            ExprPtr exp_tree = parse_factor();
            std::int64_t k = fold_exponent(*exp_tree);
            if (k < 0) check_divisor(*base);
            base = Expr::make_pow(base, k, off);
        }
        return base;
    }

    std::int64_t fold_exponent(const Expr& exp_tree) {
        auto v = const_value(exp_tree);
        if (!v) throw ParseError(exp_tree.offset, "non-constant exponent");
        if (denominator(*v) != 1) throw ParseError(exp_tree.offset, "non-integer exponent");
        Int num = numerator(*v);
        if (num > kMaxExponent || num < -kMaxExponent)
            throw ParseError(exp_tree.offset, "exponent magnitude exceeds " +
                                                  std::to_string(kMaxExponent));
        return num.convert_to<std::int64_t>();
    }

    // Division (and negative powers) only by c*n^k with c != 0.
    void check_divisor(const Expr& e) {
        auto m = monomial_shape(e);
        if (!m)
            throw ParseError(e.offset,
                             "division requires a nonzero rational constant or a power of n");
        if (m->coeff == 0) throw ParseError(e.offset, "division by zero");
    }

    ExprPtr parse_primary() {
        switch (tok_.kind) {
            case Tok::Number: {
                Token t = tok_;
                advance();
                return Expr::make_number(rat_from_string(t.text), t.offset);
            }
            case Tok::LParen: {
                advance();
                ExprPtr e = parse_expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Ident: return parse_ident();
            default:
                throw ParseError(tok_.offset, "expected an expression",
                                 "number, 'n', '(', 'sinq', 'altsign', 'piecewise'");
        }
    }

    ExprPtr parse_ident() {
        Token t = tok_;
        advance();
        if (t.text == "n") return Expr::make_index(t.offset);
        if (t.text == "sinq" || t.text == "altsign") {
            expect(Tok::LParen, "'('");
            ExprPtr arg = parse_expr();
            if (arg->kind != Expr::Kind::Index)
                throw ParseError(arg->offset, "builtin argument must be n");
            expect(Tok::RParen, "')'");
            auto kind = t.text == "sinq" ? Expr::Kind::Sinq : Expr::Kind::AltSign;
            return Expr::make_unary(kind, arg, t.offset);
        }
        if (t.text == "piecewise") return parse_piecewise(t.offset);
        throw ParseError(t.offset, "unknown identifier '" + t.text + "'",
                         "'n', 'sinq', 'altsign', 'piecewise'");
    }

    ExprPtr parse_piecewise(std::size_t off) {
        expect(Tok::LParen, "'('");
        Token kw = expect(Tok::Ident, "'mod'");
        if (kw.text != "mod") throw ParseError(kw.offset, "expected 'mod'", "'mod'");
        Token m_tok = expect(Tok::Number, "a positive integer modulus");
        Rat m_val = rat_from_string(m_tok.text);
        if (denominator(m_val) != 1 || m_val < 1)
            throw ParseError(m_tok.offset, "modulus must be a positive integer");
        if (m_val > kMaxModulus)
            throw ParseError(m_tok.offset, "modulus exceeds " + std::to_string(kMaxModulus));
        std::int64_t m = numerator(m_val).convert_to<std::int64_t>();
        expect(Tok::Semi, "';'");
        std::vector<ExprPtr> branches;
        branches.push_back(parse_expr());
        while (tok_.kind == Tok::Comma) {
            advance();
            branches.push_back(parse_expr());
        }
        expect(Tok::RParen, "')'");
        if (static_cast<std::int64_t>(branches.size()) != m)
            throw ParseError(off, "piecewise(mod " + std::to_string(m) + "; ...) needs exactly " +
                                      std::to_string(m) + " branches, got " +
                                      std::to_string(branches.size()));
        return Expr::make_piecewise(m, std::move(branches), off);
    }
};

}  // namespace

ExprPtr parse(std::string_view text) {
    if (text.empty()) throw ParseError(0, "empty expression");
    return Parser(text).parse_all();
}

}  // namespace seqblocks
