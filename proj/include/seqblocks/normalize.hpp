#ifndef SEQBLOCKS_NORMALIZE_HPP
#define SEQBLOCKS_NORMALIZE_HPP

#include "seqblocks/canonical.hpp"
#include "seqblocks/expr.hpp"

#include <string>

namespace seqblocks {

/// Canonical form agreeing with the expression at every index n >= 1.
CanonicalSeq normalize(const Expr& e);

/// Parse + normalize in one step.
CanonicalSeq normalize(const std::string& text);

/// Prints a canonical sequence as "piecewise(mod m; p_0, ..., p_{m-1})".
/// Round-trip stable: normalize(parse(render(s))) == s.
std::string render(const CanonicalSeq& s);

/// One residue-class power sum as an expression in n ("2*n - 1 + n^-2").
std::string render_poly(const ClassPoly& p);

}  // namespace seqblocks

#endif
