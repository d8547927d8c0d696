#ifndef SEQBLOCKS_EXPR_HPP
#define SEQBLOCKS_EXPR_HPP

#include "seqblocks/rational.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace seqblocks {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// AST of the sequence-expression mini-language. Pow exponents are resolved
/// to constant integers at parse time; Piecewise selects branch (n mod m).
struct Expr {
    enum class Kind { Number, Index, Neg, Add, Sub, Mul, Div, Pow, Sinq, AltSign, Piecewise };

    Kind kind;
    std::size_t offset = 0;  // byte offset in the source text

    Rat number;                     // Number
    ExprPtr lhs, rhs;               // Neg uses lhs only
    std::int64_t pow_exp = 0;       // Pow
    std::int64_t pw_modulus = 0;    // Piecewise
    std::vector<ExprPtr> branches;  // Piecewise

    static ExprPtr make_number(Rat v, std::size_t off);
    static ExprPtr make_index(std::size_t off);
    static ExprPtr make_unary(Kind k, ExprPtr e, std::size_t off);
    static ExprPtr make_binary(Kind k, ExprPtr l, ExprPtr r, std::size_t off);
    static ExprPtr make_pow(ExprPtr base, std::int64_t e, std::size_t off);
    static ExprPtr make_piecewise(std::int64_t m, std::vector<ExprPtr> branches, std::size_t off);
};

/// Exact value of the expression at index n >= 1.
Rat expr_eval(const Expr& e, std::int64_t n);

}  // namespace seqblocks

#endif
