#ifndef SEQBLOCKS_CONNECTORS_HPP
#define SEQBLOCKS_CONNECTORS_HPP

#include "seqblocks/graphs.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace seqblocks {

/// Where a residue class of a canonical sequence is nonzero. For a class
/// that is not identically zero, `bound` is a leading-term dominance bound:
/// the class evaluates nonzero at every member index > bound, and the
/// finitely many zeros at member indices <= bound are listed exhaustively.
struct ClassSupport {
    bool identically_zero = false;
    std::int64_t bound = 0;
    std::vector<std::int64_t> transient_zeros;
};

struct SupportAnalysis {
    std::vector<ClassSupport> classes;
    bool has_infinitely_many_zeros = false;  // iff some class is identically zero
    bool eventually_zero = false;            // for canonical forms: the zero sequence
    std::optional<std::int64_t> zero_class;  // a witness identically-zero class
};

SupportAnalysis support_analysis(const CanonicalSeq& a);

/// How a connector was built.
///   A..D       the four profile patterns, on a split of the support
///   ZeroToG    the constant zero connector (target G)
///   NegateEF   the constant -1 connector between E and F
///   DominateEF per-class leading-term inversion driving the product to +/-n
enum class ConnectorPattern { A, B, C, D, ZeroToG, NegateEF, DominateEF };

/// A certified connector: block_of(a (.) c) = target, checked at
/// construction against the exact classifier.
struct Connector {
    CanonicalSeq c;
    ConnectorPattern pattern;
    Block target;
};

enum class ObstructionReason { InfinitelyManyZeros, EventuallyZeroSource, SourceIsZero };

/// A certified reason no connector to `target` exists for the source.
struct Obstruction {
    ObstructionReason reason;
    Block target;
    std::optional<std::int64_t> witness_class;  // identically-zero class, when relevant
};

const char* obstruction_reason_name(ObstructionReason r);

/// Constructor toward the profile pattern of blocks A-D.
/// Requires a source that is not eventually zero. The used part of the
/// support is always split off from an infinite zeroed part (by doubling the
/// modulus, and doubling again for the two-sided patterns B and D), so the
/// product keeps infinitely many zeros regardless of the support's density.
Connector pattern_connector(const CanonicalSeq& a, ConnectorPattern pattern);

/// Total per-sequence connector synthesis toward any target block. Target G
/// always succeeds (c = 0); targets A-D succeed iff the source is not
/// eventually zero; targets E/F succeed iff the source has finitely many
/// zeros. Obstructions are answers, not errors.
std::variant<Connector, Obstruction> connect(const CanonicalSeq& a, Block target);

/// Per-entry proof object for the micro adjacency matrix.
struct MicroEntry {
    Block source, target;
    bool connected = false;
    // Positive certificate: members of the source block, each with its
    // validated connector (parallel vectors).
    std::vector<CanonicalSeq> members;
    std::vector<Connector> connectors;
    // Negative certificate: the counterexample member and its obstruction.
    std::optional<CanonicalSeq> witness;
    std::optional<Obstruction> obstruction;
};

struct MicroResult {
    AdjMatrix7 matrix;
    std::vector<MicroEntry> entries;  // the 42 distinct ordered pairs, row-major
};

/// Reconstructs the realized block-connection matrix from the connector
/// machinery: an entry is 1 iff synthesis succeeds for every tested member
/// of the source block (representative, shifts, scalings, and the zero-rich
/// member where one exists). Entries are independent; the parallel flag runs
/// them under OpenMP.
MicroResult micro_matrix(bool parallel = false);

}  // namespace seqblocks

#endif
