#include "seqblocks/graphs.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace seqblocks {

void AdjMatrix7::set(Block source, Block target, bool value) {
    if (source == target && value)
        throw std::invalid_argument("adjacency diagonal must stay zero");
    e_[static_cast<std::size_t>(source)][static_cast<std::size_t>(target)] = value;
}

std::int64_t AdjMatrix7::ones() const {
    std::int64_t count = 0;
    for (const auto& row : e_)
        for (bool b : row) count += b ? 1 : 0;
    return count;
}

AdjMatrix7 reference_macro_matrix() {
    AdjMatrix7 u;
    for (Block x : kAllBlocks)
        for (Block y : kAllBlocks)
            if (x != y) u.set(x, y, true);
    return u;
}

AdjMatrix7 reference_micro_matrix() {
    // Rows A..D: edges to the other oscillatory blocks and to G.
    // E and F: additionally the mutual pair. Row G: no outgoing edges.
    AdjMatrix7 v;
    const Block osc[] = {Block::A, Block::B, Block::C, Block::D};
    for (Block x : osc) {
        for (Block y : osc)
            if (x != y) v.set(x, y, true);
        v.set(x, Block::G, true);
    }
    for (Block x : {Block::E, Block::F}) {
        for (Block y : osc) v.set(x, y, true);
        v.set(x, Block::G, true);
    }
    v.set(Block::E, Block::F, true);
    v.set(Block::F, Block::E, true);
    return v;
}

ContingencyCounts contingency(const AdjMatrix7& u, const AdjMatrix7& v) {
    ContingencyCounts c;
    for (Block x : kAllBlocks)
        for (Block y : kAllBlocks) {
            bool a = u.get(x, y), b = v.get(x, y);
            if (a && b) ++c.n11;
            else if (a) ++c.n10;
            else if (b) ++c.n01;
            else ++c.n00;
        }
    return c;
}

Metrics metrics(const ContingencyCounts& c) {
    if (c.n11 + c.n10 + c.n01 + c.n00 != 49)
        throw std::invalid_argument("contingency counts must sum to 49");
    if (c.n11 < 0 || c.n10 < 0 || c.n01 < 0 || c.n00 < 0)
        throw std::invalid_argument("contingency counts must be non-negative");
    Metrics m;
    if (c.n11 + c.n10 > 0) m.coverage = Rat(Int(c.n11), Int(c.n11 + c.n10));
    if (c.n11 + c.n01 > 0) {
        m.consistency = Rat(Int(c.n11), Int(c.n11 + c.n01));
    } else {
        m.consistency = 1;
        m.consistency_by_convention = true;
    }
    if (c.n11 + c.n10 + c.n01 > 0) m.jaccard = Rat(Int(c.n11), Int(c.n11 + c.n10 + c.n01));
    m.hamming = Rat(Int(c.n11 + c.n00), Int(49));
    return m;
}

std::string export_dot(const AdjMatrix7& m, GraphLevel level) {
    std::string out = "digraph ";
    out += level == GraphLevel::Macro ? "macroscale" : "microscale";
    out += " {\n";
    out += "  layout=neato;\n";
    out += "  node [shape=circle, style=filled, fillcolor=\"#e8873a\"];\n";
    for (int i = 0; i < 7; ++i) {
        // Regular heptagon, A on top, clockwise.
        double angle = M_PI / 2 - 2 * M_PI * i / 7;
        char buf[96];
        std::snprintf(buf, sizeof(buf), "  %c [pos=\"%.3f,%.3f!\"];\n",
                      block_letter(static_cast<Block>(i)), 2 * std::cos(angle),
                      2 * std::sin(angle));
        out += buf;
    }
    for (Block x : kAllBlocks)
        for (Block y : kAllBlocks)
            if (m.get(x, y)) {
                out += "  ";
                out += block_letter(x);
                out += " -> ";
                out += block_letter(y);
                out += ";\n";
            }
    out += "}\n";
    return out;
}

std::string export_csv(const AdjMatrix7& m) {
    std::string out = ",A,B,C,D,E,F,G\n";
    for (Block x : kAllBlocks) {
        out += block_letter(x);
        for (Block y : kAllBlocks) {
            out += ',';
            out += m.get(x, y) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

}  // namespace seqblocks
