#ifndef SEQBLOCKS_CODING_HPP
#define SEQBLOCKS_CODING_HPP

#include "seqblocks/graphs.hpp"
#include "seqblocks/sequence.hpp"

namespace seqblocks {

/// sigma(x) = (1 + x/(1+|x|)) / 2, a strictly increasing bijection from the
/// rationals into (0, 1).
Rat sigma(const Rat& x);
/// Inverse of sigma on (0, 1).
Rat sigma_inv(const Rat& y);

enum class Coder { Weighted, Interleaved };

/// A finite-truncation code for a sequence: an exact rational in (0, 1).
struct Code {
    Rat value;
    std::int64_t depth = 0;   // K, number of leading terms encoded
    Coder coder = Coder::Interleaved;
    std::int64_t digits = 0;  // D, per-term binary digits (Interleaved only)
};

/// Sum_{n=1..K} 2^(-2^n) * sigma(a_n). NOT injective, even on K-prefixes:
/// sigma differences are not bounded below by the weight gap, so distinct
/// sequences can collide (see the collision regression test).
Code encode_weighted(const Sequence& a, std::int64_t K);

/// Takes the first D binary digits of each sigma(a_n), n <= K, arranges the
/// K x D grid in anti-diagonal order (within a diagonal: by increasing
/// column) into one binary fraction. Injective on (K, D)-truncations:
/// prefixes whose sigma digit grids differ receive distinct codes.
Code encode_interleaved(const Sequence& a, std::int64_t K, std::int64_t D);

struct CoderConfig {
    Coder coder = Coder::Interleaved;
    std::int64_t depth = 8;
    std::int64_t digits = 16;
};

Code encode(const Sequence& a, const CoderConfig& cfg);

/// Image of a block-transfer map: a canonical sequence certified to lie in
/// the target block, remembering the code that parameterized it.
struct TransferImage {
    Block target;
    CanonicalSeq seq;
    Code source_code;
};

/// The seven target constructions, driven by a code value c in (0, 1):
///   G: constant c            F: n + c              E: -n - c
///   D: even n/2 + c, odd -(n+1)/2 - c
///   C: even n/2, odd c + vanishing tail
///   B: odd c + tail, even (c+1) - tail
///   A: even -n/2, odd c - tail
/// The even/odd index bookkeeping is realized as residue classes mod 2 with
/// per-class power sums in the global index.
TransferImage t_map(Block x, const Code& code);

/// Restriction T_(Y,X): encodes a member of Y and maps it into X != Y.
TransferImage transfer(Block y, Block x, const Sequence& a, const CoderConfig& cfg);

/// Recovers the code from a t_map image, exactly; throws if the image does
/// not have the expected shape for the block.
Rat recover_code(Block x, const CanonicalSeq& image);

/// The idealized block-to-block relation: every distinct ordered pair admits
/// an injective transfer, so all 42 off-diagonal entries are 1.
AdjMatrix7 macro_matrix();

}  // namespace seqblocks

#endif
