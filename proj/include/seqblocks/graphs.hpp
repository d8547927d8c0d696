#ifndef SEQBLOCKS_GRAPHS_HPP
#define SEQBLOCKS_GRAPHS_HPP

#include "seqblocks/blocks.hpp"
#include "seqblocks/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace seqblocks {

/// 7x7 boolean adjacency matrix over the blocks; rows are sources, columns
/// targets. Only distinct-pair relations are defined, so the diagonal is 0.
class AdjMatrix7 {
  public:
    AdjMatrix7() { for (auto& row : e_) row.fill(false); }

    bool get(Block source, Block target) const {
        return e_[static_cast<std::size_t>(source)][static_cast<std::size_t>(target)];
    }
    void set(Block source, Block target, bool value);

    std::int64_t ones() const;

    bool operator==(const AdjMatrix7& o) const = default;

  private:
    std::array<std::array<bool, 7>, 7> e_;
};

/// Hard-coded ground-truth matrices: all 42 off-diagonal ones (macro), and
/// the 28-edge realized relation (micro). The constructive modules rebuild
/// both; equality with these is an acceptance test, not an assumption.
AdjMatrix7 reference_macro_matrix();
AdjMatrix7 reference_micro_matrix();

struct ContingencyCounts {
    std::int64_t n11 = 0, n10 = 0, n01 = 0, n00 = 0;
};

/// Entrywise agreement counts over all 49 positions.
ContingencyCounts contingency(const AdjMatrix7& u, const AdjMatrix7& v);

/// The similarity statistics, as exact rationals.
///   coverage    = n11 / (n11 + n10)   (empty -> undefined, reported as such)
///   consistency = n11 / (n11 + n01)   (0/0 -> 1 by convention, flagged)
///   jaccard     = n11 / (n11 + n10 + n01)  (empty -> undefined)
///   hamming     = (n11 + n00) / 49
struct Metrics {
    std::optional<Rat> coverage;
    Rat consistency = 0;
    bool consistency_by_convention = false;
    std::optional<Rat> jaccard;
    Rat hamming = 0;
};

Metrics metrics(const ContingencyCounts& c);

enum class GraphLevel { Macro, Micro };

/// Deterministic DOT document: the seven nodes pinned on a regular heptagon,
/// one edge statement per 1-entry, fixed node and edge order.
std::string export_dot(const AdjMatrix7& m, GraphLevel level);

/// Header-labeled CSV (7 rows plus header).
std::string export_csv(const AdjMatrix7& m);

}  // namespace seqblocks

#endif
