#ifndef SEQBLOCKS_BATCH_HPP
#define SEQBLOCKS_BATCH_HPP

#include "seqblocks/blocks.hpp"

#include <vector>

namespace seqblocks {

/// Batch classification over a corpus. Members are independent, so the
/// OpenMP variants are bit-identical to the serial references.
std::vector<Block> classify_batch_serial(const std::vector<CanonicalSeq>& corpus);
std::vector<Block> classify_batch_omp(const std::vector<CanonicalSeq>& corpus);

/// Numeric classification of a corpus through the window estimator.
std::vector<Block> estimate_blocks_serial(const std::vector<CanonicalSeq>& corpus,
                                          const EstimatorConfig& cfg);
std::vector<Block> estimate_blocks_omp(const std::vector<CanonicalSeq>& corpus,
                                       const EstimatorConfig& cfg);

}  // namespace seqblocks

#endif
