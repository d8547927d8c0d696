#include "seqblocks/expr.hpp"

#include <stdexcept>

namespace seqblocks {

ExprPtr Expr::make_number(Rat v, std::size_t off) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Number;
    e->number = std::move(v);
    e->offset = off;
    return e;
}

ExprPtr Expr::make_index(std::size_t off) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Index;
    e->offset = off;
    return e;
}

ExprPtr Expr::make_unary(Kind k, ExprPtr sub, std::size_t off) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(sub);
    e->offset = off;
    return e;
}

ExprPtr Expr::make_binary(Kind k, ExprPtr l, ExprPtr r, std::size_t off) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    e->offset = off;
    return e;
}

ExprPtr Expr::make_pow(ExprPtr base, std::int64_t exp, std::size_t off) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Pow;
    e->lhs = std::move(base);
    e->pow_exp = exp;
    e->offset = off;
    return e;
}

ExprPtr Expr::make_piecewise(std::int64_t m, std::vector<ExprPtr> branches, std::size_t off) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Piecewise;
    e->pw_modulus = m;
    e->branches = std::move(branches);
    e->offset = off;
    return e;
}

Rat expr_eval(const Expr& e, std::int64_t n) {
    if (n < 1) throw std::domain_error("sequence index must be >= 1");
    switch (e.kind) {
        case Expr::Kind::Number: return e.number;
        case Expr::Kind::Index: return Rat(n);
        case Expr::Kind::Neg: return -expr_eval(*e.lhs, n);
        case Expr::Kind::Add: return expr_eval(*e.lhs, n) + expr_eval(*e.rhs, n);
        case Expr::Kind::Sub: return expr_eval(*e.lhs, n) - expr_eval(*e.rhs, n);
        case Expr::Kind::Mul: return expr_eval(*e.lhs, n) * expr_eval(*e.rhs, n);
        case Expr::Kind::Div: {
            Rat d = expr_eval(*e.rhs, n);
            if (d == 0) throw std::domain_error("division by zero at index " + std::to_string(n));
            return expr_eval(*e.lhs, n) / d;
        }
        case Expr::Kind::Pow: return rat_pow(expr_eval(*e.lhs, n), e.pow_exp);
        case Expr::Kind::Sinq: {
            // sin(n*pi/2): 4-periodic pattern 0, 1, 0, -1 on residues 0..3.
            switch (n % 4) {
                case 1: return Rat(1);
                case 3: return Rat(-1);
                default: return Rat(0);
            }
        }
        case Expr::Kind::AltSign: return n % 2 == 0 ? Rat(1) : Rat(-1);
        case Expr::Kind::Piecewise:
            return expr_eval(*e.branches[static_cast<std::size_t>(n % e.pw_modulus)], n);
    }
    throw std::logic_error("unreachable expression kind");
}

}  // namespace seqblocks
