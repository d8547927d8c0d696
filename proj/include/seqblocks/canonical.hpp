#ifndef SEQBLOCKS_CANONICAL_HPP
#define SEQBLOCKS_CANONICAL_HPP

#include "seqblocks/rational.hpp"

#include <cstdint>
#include <vector>

namespace seqblocks {

/// One summand coeff * n^exp of a residue-class power sum. coeff is never zero.
struct Term {
    Rat coeff;
    std::int64_t exp = 0;

    bool operator==(const Term& o) const = default;
};

/// Finite power sum in the global index n, sorted by strictly decreasing
/// exponent with no zero coefficients and no repeated exponents.
using ClassPoly = std::vector<Term>;

ClassPoly poly_normalize(ClassPoly terms);
ClassPoly poly_add(const ClassPoly& a, const ClassPoly& b);
ClassPoly poly_mul(const ClassPoly& a, const ClassPoly& b);
ClassPoly poly_scale(const ClassPoly& a, const Rat& lambda);
Rat poly_eval(const ClassPoly& p, std::int64_t n);

/// A sequence in canonical form: a modulus m >= 1 and one power sum per
/// residue class. The value at index n >= 1 is the class (n mod m) evaluated
/// at n. The stored modulus is always the least one realizing the sequence,
/// so pointwise-equal sequences have structurally identical canonical forms.
class CanonicalSeq {
  public:
    CanonicalSeq() : modulus_(1), classes_(1) {}

    /// Normalizes each class and folds the modulus to the least period.
    static CanonicalSeq from_classes(std::int64_t modulus, std::vector<ClassPoly> classes);

    static CanonicalSeq zero() { return CanonicalSeq(); }
    static CanonicalSeq constant(const Rat& c);
    /// c * n^e on every index (empty sequence when c = 0).
    static CanonicalSeq monomial(const Rat& c, std::int64_t e);

    std::int64_t modulus() const { return modulus_; }
    const ClassPoly& cls(std::int64_t r) const { return classes_[static_cast<std::size_t>(r)]; }
    const std::vector<ClassPoly>& classes() const { return classes_; }

    Rat eval(std::int64_t n) const;
    bool is_zero() const;
    /// True when the whole sequence is a single term c*n^e (modulus 1).
    bool single_term() const { return modulus_ == 1 && classes_[0].size() == 1; }

    CanonicalSeq negated() const;
    CanonicalSeq scaled(const Rat& lambda) const;
    CanonicalSeq shifted(const Rat& alpha) const;
    /// Integer power; negative exponents require a single-term sequence.
    CanonicalSeq powed(std::int64_t e) const;

    friend CanonicalSeq add(const CanonicalSeq& a, const CanonicalSeq& b);
    friend CanonicalSeq mul(const CanonicalSeq& a, const CanonicalSeq& b);

    bool operator==(const CanonicalSeq& o) const = default;

  private:
    std::int64_t modulus_;
    std::vector<ClassPoly> classes_;
};

}  // namespace seqblocks

#endif
