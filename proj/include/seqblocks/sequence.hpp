#ifndef SEQBLOCKS_SEQUENCE_HPP
#define SEQBLOCKS_SEQUENCE_HPP

#include "seqblocks/canonical.hpp"

#include <functional>
#include <variant>

namespace seqblocks {

using GeneratorFn = std::function<Rat(std::int64_t)>;

/// A real-valued sequence: either a canonical form (exact, classifiable) or
/// an opaque deterministic generator. All certified results are defined on
/// canonical sequences only; generators exist so the numeric estimator can
/// be driven by arbitrary inputs.
class Sequence {
  public:
    Sequence(CanonicalSeq s) : rep_(std::move(s)) {}
    Sequence(GeneratorFn f) : rep_(std::move(f)) {}

    bool is_canonical() const { return std::holds_alternative<CanonicalSeq>(rep_); }
    const CanonicalSeq& canonical() const { return std::get<CanonicalSeq>(rep_); }

    /// Exact value at index n >= 1.
    Rat at(std::int64_t n) const;

  private:
    std::variant<CanonicalSeq, GeneratorFn> rep_;
};

/// Pointwise vector-space operations. Canonical operands stay canonical (on
/// the lcm of the moduli); anything involving a generator yields a generator.
Sequence add(const Sequence& a, const Sequence& b);
Sequence negate(const Sequence& a);
Sequence scale(const Rat& lambda, const Sequence& a);
Sequence shift(const Rat& alpha, const Sequence& a);

/// Hadamard (pointwise) product (a (.) c)_n = a_n * c_n.
Sequence hadamard(const Sequence& a, const Sequence& c);

inline Rat eval_at(const Sequence& a, std::int64_t n) { return a.at(n); }

}  // namespace seqblocks

#endif
