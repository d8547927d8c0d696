#ifndef SEQBLOCKS_BLOCKS_HPP
#define SEQBLOCKS_BLOCKS_HPP

#include "seqblocks/profile.hpp"

#include <optional>
#include <set>
#include <string>

namespace seqblocks {

/// The seven-way taxonomy of limit profiles:
///   A: (-inf, finite)     lower-unbounded oscillatory
///   B: (x, y) finite x<y  bounded oscillatory
///   C: (finite, +inf)     upper-unbounded oscillatory
///   D: (-inf, +inf)       fully-unbounded oscillatory
///   E: (-inf, -inf)       downward divergent
///   F: (+inf, +inf)       upward divergent
///   G: (x, x) finite      finite convergent
enum class Block { A, B, C, D, E, F, G };

inline constexpr Block kAllBlocks[] = {Block::A, Block::B, Block::C, Block::D,
                                       Block::E, Block::F, Block::G};

char block_letter(Block b);
std::optional<Block> block_from_letter(char c);
const char* block_description(Block b);

/// Total on valid profiles; the seven patterns are mutually exclusive and
/// cover every profile with lo <= hi.
Block block_of(const LimitProfile& p);

inline Block block_of(const CanonicalSeq& a) { return block_of(exact_profile(a)); }

/// The closed-form representative of each block.
const CanonicalSeq& representative(Block b);

/// representative(b) + alpha for alpha in (0, 1); still lies in b, and
/// distinct alphas give pointwise-distinct sequences.
CanonicalSeq representative_shifted(Block b, const Rat& alpha);

/// Outcome of the block-union subspace decision. A negative verdict carries
/// a machine-checkable witness, re-verified through the classifier before
/// being returned:
///   ZeroMissing     x in M, 0*x is the zero sequence, in G, outside M
///   AdditionEscape  x, y in M with x + y outside M
///   ScalarEscape    x in M with lambda*x outside M (lambda = -1 cases)
struct SubspaceVerdict {
    enum class Witness { None, ZeroMissing, AdditionEscape, ScalarEscape };

    bool is_subspace = false;
    Witness witness = Witness::None;
    CanonicalSeq x, y, result;
    Rat lambda = 0;
    Block x_block = Block::G, y_block = Block::G, result_block = Block::G;
};

/// Decides whether a nonempty union of blocks is a linear subspace. True
/// exactly for {G}, {B, G} and the full set of seven.
SubspaceVerdict union_is_subspace(const std::set<Block>& blocks);

/// Union membership is decided purely by the block of the sequence.
inline bool in_union(const CanonicalSeq& a, const std::set<Block>& blocks) {
    return blocks.count(block_of(a)) > 0;
}

}  // namespace seqblocks

#endif
