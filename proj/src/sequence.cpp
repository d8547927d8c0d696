#include "seqblocks/sequence.hpp"

namespace seqblocks {

Rat Sequence::at(std::int64_t n) const {
    if (n < 1) throw std::domain_error("sequence index must be >= 1");
    if (const auto* c = std::get_if<CanonicalSeq>(&rep_)) return c->eval(n);
    return std::get<GeneratorFn>(rep_)(n);
}

Sequence add(const Sequence& a, const Sequence& b) {
    if (a.is_canonical() && b.is_canonical()) return add(a.canonical(), b.canonical());
    return GeneratorFn([a, b](std::int64_t n) { return Rat(a.at(n) + b.at(n)); });
}

Sequence negate(const Sequence& a) {
    if (a.is_canonical()) return a.canonical().negated();
    return GeneratorFn([a](std::int64_t n) { return Rat(-a.at(n)); });
}

Sequence scale(const Rat& lambda, const Sequence& a) {
    if (a.is_canonical()) return a.canonical().scaled(lambda);
    return GeneratorFn([lambda, a](std::int64_t n) { return Rat(lambda * a.at(n)); });
}

Sequence shift(const Rat& alpha, const Sequence& a) {
    if (a.is_canonical()) return a.canonical().shifted(alpha);
    return GeneratorFn([alpha, a](std::int64_t n) { return Rat(a.at(n) + alpha); });
}

Sequence hadamard(const Sequence& a, const Sequence& c) {
    if (a.is_canonical() && c.is_canonical()) return mul(a.canonical(), c.canonical());
    return GeneratorFn([a, c](std::int64_t n) { return Rat(a.at(n) * c.at(n)); });
}

}  // namespace seqblocks
