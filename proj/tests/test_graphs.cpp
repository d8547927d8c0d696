#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqblocks/coding.hpp"
#include "seqblocks/connectors.hpp"
#include "seqblocks/graphs.hpp"

using namespace seqblocks;

namespace {

std::size_t count_lines(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

TEST_CASE("contingency counts for the paper matrices are (28, 14, 0, 7)") {
    ContingencyCounts c = contingency(reference_macro_matrix(), reference_micro_matrix());
    CHECK(c.n11 == 28);
    CHECK(c.n10 == 14);
    CHECK(c.n01 == 0);
    CHECK(c.n00 == 7);
    CHECK(c.n11 + c.n10 + c.n01 + c.n00 == 49);
}

TEST_CASE("self-comparison and empty comparison counts") {
    AdjMatrix7 u = reference_macro_matrix();
    ContingencyCounts self = contingency(u, u);
    CHECK(self.n11 == 42);
    CHECK(self.n10 == 0);
    CHECK(self.n01 == 0);
    CHECK(self.n00 == 7);

    ContingencyCounts empty = contingency(u, AdjMatrix7());
    CHECK(empty.n11 == 0);
    CHECK(empty.n10 == 42);
    CHECK(empty.n01 == 0);
    CHECK(empty.n00 == 7);
}

TEST_CASE("metrics of the paper comparison") {
    Metrics m = metrics(ContingencyCounts{28, 14, 0, 7});
    REQUIRE(m.coverage.has_value());
    CHECK(*m.coverage == make_rat(2, 3));
    CHECK(m.consistency == Rat(1));
    CHECK(!m.consistency_by_convention);
    REQUIRE(m.jaccard.has_value());
    CHECK(*m.jaccard == make_rat(2, 3));
    CHECK(m.hamming == make_rat(35, 49));
    // With E(V) inside E(U), jaccard and coverage coincide.
    CHECK(*m.jaccard == *m.coverage);
}

TEST_CASE("metrics of identical and disjoint matrices") {
    Metrics same = metrics(ContingencyCounts{42, 0, 0, 7});
    CHECK(*same.coverage == Rat(1));
    CHECK(same.consistency == Rat(1));
    CHECK(*same.jaccard == Rat(1));
    CHECK(same.hamming == Rat(1));

    Metrics none = metrics(ContingencyCounts{0, 42, 0, 7});
    CHECK(*none.coverage == Rat(0));
    CHECK(none.consistency == Rat(1));  // 0/0 convention
    CHECK(none.consistency_by_convention);
    CHECK(*none.jaccard == Rat(0));
    CHECK(none.hamming == make_rat(7, 49));
}

TEST_CASE("degenerate denominators are reported, never silently zero") {
    Metrics m = metrics(ContingencyCounts{0, 0, 0, 49});
    CHECK(!m.coverage.has_value());
    CHECK(!m.jaccard.has_value());
    CHECK(m.consistency == Rat(1));
    CHECK(m.consistency_by_convention);
    CHECK(m.hamming == Rat(1));
    CHECK_THROWS_AS(metrics(ContingencyCounts{1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("the constructive matrices equal the printed ones") {
    CHECK(macro_matrix() == reference_macro_matrix());
    CHECK(micro_matrix().matrix == reference_micro_matrix());
}

TEST_CASE("dot export of the micro graph") {
    std::string dot = export_dot(reference_micro_matrix(), GraphLevel::Micro);
    CHECK(count_lines(dot, " -> ") == 28);
    CHECK(dot.find("G -> ") == std::string::npos);  // no edges leave G
    CHECK(dot.find("digraph microscale") == 0);
    CHECK(count_lines(dot, "pos=") == 7);
}

TEST_CASE("dot export of the macro graph and the empty graph") {
    std::string dot = export_dot(reference_macro_matrix(), GraphLevel::Macro);
    CHECK(count_lines(dot, " -> ") == 42);
    CHECK(dot.find("digraph macroscale") == 0);

    std::string empty = export_dot(AdjMatrix7(), GraphLevel::Macro);
    CHECK(count_lines(empty, " -> ") == 0);
    CHECK(count_lines(empty, "pos=") == 7);
}

TEST_CASE("dot export is deterministic") {
    CHECK(export_dot(reference_micro_matrix(), GraphLevel::Micro) ==
          export_dot(reference_micro_matrix(), GraphLevel::Micro));
    CHECK(export_dot(macro_matrix(), GraphLevel::Macro) ==
          export_dot(reference_macro_matrix(), GraphLevel::Macro));
}

TEST_CASE("csv export carries labeled rows") {
    std::string csv = export_csv(reference_micro_matrix());
    CHECK(csv.rfind(",A,B,C,D,E,F,G\n", 0) == 0);
    CHECK(count_lines(csv, "\n") == 8);
    CHECK(csv.find("G,0,0,0,0,0,0,0\n") != std::string::npos);
    CHECK(csv.find("E,1,1,1,1,0,1,1\n") != std::string::npos);
}

TEST_CASE("adjacency diagonal stays zero") {
    AdjMatrix7 m;
    CHECK_THROWS_AS(m.set(Block::A, Block::A, true), std::invalid_argument);
    CHECK_NOTHROW(m.set(Block::A, Block::A, false));
    m.set(Block::A, Block::B, true);
    CHECK(m.ones() == 1);
}
