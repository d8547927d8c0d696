// Benchmark comparing the serial reference kernels against their OpenMP
// counterparts. Results are checked for equality before timings are printed;
// a mismatch aborts.
#include "seqblocks/batch.hpp"
#include "seqblocks/connectors.hpp"
#include "seqblocks/kernels.hpp"
#include "seqblocks/normalize.hpp"

#include "../tests/corpus.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace seqblocks;
using namespace seqblocks::testing;

namespace {

double time_ms(const std::function<void()>& fn, int repetitions) {
    double best = 1e300;
    for (int i = 0; i < repetitions; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s %10.2f ms %10.2f ms %8.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, equal ? "results equal" : "MISMATCH");
    if (!equal) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    if (reps < 1) reps = 1;

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel variants run serially\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    {
        Sequence a(normalize("n*(sinq(n)+1) + 1/n"));
        const std::int64_t first = 1, last = 200000;
        std::vector<Rat> serial_out, parallel_out;
        double s = time_ms([&] { serial_out = window_values_serial(a, first, last); }, reps);
        double p = time_ms([&] { parallel_out = window_values_omp(a, first, last); }, reps);
        report("window eval (200k points)", s, p, serial_out == parallel_out);
    }

    {
        auto corpus = grammar_corpus(20000, 1234);
        std::vector<Block> serial_out, parallel_out;
        double s = time_ms([&] { serial_out = classify_batch_serial(corpus); }, reps);
        double p = time_ms([&] { parallel_out = classify_batch_omp(corpus); }, reps);
        report("classify batch (20k seqs)", s, p, serial_out == parallel_out);
    }

    {
        auto corpus = grammar_corpus(200, 5678);
        EstimatorConfig cfg;
        std::vector<Block> serial_out, parallel_out;
        double s = time_ms([&] { serial_out = estimate_blocks_serial(corpus, cfg); }, reps);
        double p = time_ms([&] { parallel_out = estimate_blocks_omp(corpus, cfg); }, reps);
        report("estimate batch (200 seqs)", s, p, serial_out == parallel_out);
    }

    {
        MicroResult serial_out, parallel_out;
        double s = time_ms([&] { serial_out = micro_matrix(false); }, reps);
        double p = time_ms([&] { parallel_out = micro_matrix(true); }, reps);
        report("micro matrix (42 entries)", s, p, serial_out.matrix == parallel_out.matrix);
    }

    return 0;
}
