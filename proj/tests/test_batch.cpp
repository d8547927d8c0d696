#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqblocks/batch.hpp"
#include "seqblocks/kernels.hpp"
#include "seqblocks/normalize.hpp"

#include "corpus.hpp"

using namespace seqblocks;
using namespace seqblocks::testing;

TEST_CASE("parallel window evaluation is bit-identical to the serial reference") {
    for (const char* text : {"n*(sinq(n)+1)", "1/n - 3/4*n^2", "piecewise(mod 3; n, -n, 1/2)"}) {
        Sequence a(normalize(text));
        auto serial = window_values_serial(a, 1, 2000);
        auto parallel = window_values_omp(a, 1, 2000);
        CHECK(serial == parallel);
    }
    Sequence gen(GeneratorFn([](std::int64_t n) { return Rat(n % 7) - make_rat(1, 3); }));
    CHECK(window_values_serial(gen, 5, 500) == window_values_omp(gen, 5, 500));
}

TEST_CASE("window evaluation rejects bad windows") {
    Sequence a(normalize("n"));
    CHECK_THROWS_AS(window_values_serial(a, 0, 5), std::domain_error);
    CHECK_THROWS_AS(window_values_serial(a, 5, 4), std::domain_error);
    CHECK_THROWS_AS(window_values_omp(a, 0, 5), std::domain_error);
}

TEST_CASE("min_max scans slices exactly") {
    std::vector<Rat> vals = {Rat(3), Rat(-2), Rat(7), Rat(0)};
    WindowStats all = min_max(vals, 0, 4);
    CHECK(all.min == Rat(-2));
    CHECK(all.max == Rat(7));
    WindowStats tail = min_max(vals, 2, 4);
    CHECK(tail.min == Rat(0));
    CHECK(tail.max == Rat(7));
    CHECK_THROWS_AS(min_max(vals, 2, 2), std::domain_error);
    CHECK_THROWS_AS(min_max(vals, 0, 9), std::domain_error);
}

TEST_CASE("batch classification: serial and parallel agree everywhere") {
    auto corpus = grammar_corpus(600, 321);
    auto serial = classify_batch_serial(corpus);
    auto parallel = classify_batch_omp(corpus);
    CHECK(serial == parallel);
    for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(serial[i] == block_of(corpus[i]));
}

TEST_CASE("batch estimation: serial and parallel agree everywhere") {
    auto corpus = grammar_corpus(60, 654);
    EstimatorConfig cfg;
    cfg.horizon = 2000;
    cfg.divergence_threshold = 200;
    auto serial = estimate_blocks_serial(corpus, cfg);
    auto parallel = estimate_blocks_omp(corpus, cfg);
    CHECK(serial == parallel);
}

TEST_CASE("estimate_profile matches across kernel backends") {
    EstimatorConfig serial_cfg;
    serial_cfg.parallel = false;
    EstimatorConfig parallel_cfg;
    parallel_cfg.parallel = true;
    for (const char* text : {"n", "1/n", "sinq(n)", "n*(sinq(n)-1)", "-n"}) {
        Sequence a(normalize(text));
        CHECK(estimate_profile(a, serial_cfg) == estimate_profile(a, parallel_cfg));
    }
}
