#ifndef SEQBLOCKS_PARSER_HPP
#define SEQBLOCKS_PARSER_HPP

#include "seqblocks/expr.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace seqblocks {

/// Syntax or grammar-restriction failure, carrying the byte offset where the
/// offending token starts and, for pure syntax errors, the expected tokens.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t offset, std::string message, std::string expected = "")
        : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset),
          message_(std::move(message)),
          expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::string& message() const { return message_; }
    const std::string& expected() const { return expected_; }

  private:
    std::size_t offset_;
    std::string message_;
    std::string expected_;
};

/// Grammar (whitespace-insensitive):
///
///   expr    := term (('+' | '-') term)*
///   term    := factor (('*' | '/') factor)*
///   factor  := '-' factor | power
///   power   := primary ('^' factor)*         -- exponent must fold to an integer
///   primary := NUMBER | 'n' | '(' expr ')'
///            | 'sinq' '(' 'n' ')' | 'altsign' '(' 'n' ')'
///            | 'piecewise' '(' 'mod' INT ';' expr (',' expr)* ')'
///   NUMBER  := digits ['.' digits]
///
/// sinq(n) denotes sin(n*pi/2); altsign(n) denotes (-1)^n. Division (and the
/// negative side of '^') is restricted to expressions built only from
/// numbers, 'n', '-', '*', '/', '^', i.e. values of the shape c*n^k with
/// c != 0. A piecewise(mod m; ...) needs exactly m branch expressions.
ExprPtr parse(std::string_view text);

}  // namespace seqblocks

#endif
