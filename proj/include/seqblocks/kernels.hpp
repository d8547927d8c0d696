#ifndef SEQBLOCKS_KERNELS_HPP
#define SEQBLOCKS_KERNELS_HPP

#include "seqblocks/sequence.hpp"

#include <vector>

namespace seqblocks {

/// Dense evaluation of a sequence over an index window. The OpenMP variant
/// writes disjoint slots, so serial and parallel results are identical.
std::vector<Rat> window_values_serial(const Sequence& a, std::int64_t first, std::int64_t last);
std::vector<Rat> window_values_omp(const Sequence& a, std::int64_t first, std::int64_t last);
std::vector<Rat> window_values(const Sequence& a, std::int64_t first, std::int64_t last,
                               bool parallel);

struct WindowStats {
    Rat min, max;
};

/// Min/max of a nonempty value slice.
WindowStats min_max(const std::vector<Rat>& values, std::size_t begin, std::size_t end);

}  // namespace seqblocks

#endif
