#ifndef SEQBLOCKS_PROFILE_HPP
#define SEQBLOCKS_PROFILE_HPP

#include "seqblocks/extreal.hpp"
#include "seqblocks/sequence.hpp"

#include <utility>

namespace seqblocks {

/// Limit of a residue-class power sum along its class: the sign of the
/// leading coefficient decides +/-inf when the leading exponent is positive;
/// otherwise the n^0 coefficient (0 for an empty sum). Exponents < 0
/// contribute nothing.
ExtReal class_limit(const ClassPoly& terms);

/// Exact limit profile of a canonical sequence. Each residue class has a
/// limit in the extended reals, and the sequence interleaves finitely many
/// such classes, so the cluster set is exactly the set of class limits:
/// liminf is their minimum and limsup their maximum.
LimitProfile exact_profile(const CanonicalSeq& a);

/// Finite-horizon tail bounds (min, max of a_k for k in [n, N]).
std::pair<Rat, Rat> tail_bounds(const Sequence& a, std::int64_t n, std::int64_t N);

/// Knobs of the numeric profile estimator. The estimator inspects the final
/// window [ceil((1-f)N), N]; a tail bound past the divergence threshold with
/// monotone growth across the window's three thirds is reported as +/-inf.
struct EstimatorConfig {
    std::int64_t horizon = 10000;     // N >= 8
    Rat divergence_threshold = 1000;  // M > 0
    Rat window_fraction = Rat(1, 2);  // f in (0, 1]
    bool parallel = true;             // evaluation kernel selection
};

/// Heuristic limit profile from a finite window. Documented behaviour, not a
/// certified result: agreement with exact_profile is established by tests on
/// the grammar corpus, never assumed.
LimitProfile estimate_profile(const Sequence& a, const EstimatorConfig& cfg);

}  // namespace seqblocks

#endif
