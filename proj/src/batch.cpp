#include "seqblocks/batch.hpp"

namespace seqblocks {

std::vector<Block> classify_batch_serial(const std::vector<CanonicalSeq>& corpus) {
    std::vector<Block> out(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) out[i] = block_of(corpus[i]);
    return out;
}

std::vector<Block> classify_batch_omp(const std::vector<CanonicalSeq>& corpus) {
    std::vector<Block> out(corpus.size());
    const std::int64_t count = static_cast<std::int64_t>(corpus.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = block_of(corpus[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<Block> estimate_blocks_serial(const std::vector<CanonicalSeq>& corpus,
                                          const EstimatorConfig& cfg) {
    EstimatorConfig serial_cfg = cfg;
    serial_cfg.parallel = false;
    std::vector<Block> out(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i)
        out[i] = block_of(estimate_profile(Sequence(corpus[i]), serial_cfg));
    return out;
}

std::vector<Block> estimate_blocks_omp(const std::vector<CanonicalSeq>& corpus,
                                       const EstimatorConfig& cfg) {
    // Parallelism goes over corpus members here; the per-member window
    // evaluation stays serial to avoid nested teams.
    EstimatorConfig serial_cfg = cfg;
    serial_cfg.parallel = false;
    std::vector<Block> out(corpus.size());
    const std::int64_t count = static_cast<std::int64_t>(corpus.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] =
                block_of(estimate_profile(Sequence(corpus[static_cast<std::size_t>(i)]),
                                          serial_cfg));
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace seqblocks
