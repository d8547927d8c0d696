#include "seqblocks/blocks.hpp"

#include "seqblocks/normalize.hpp"

#include <array>
#include <stdexcept>

namespace seqblocks {

char block_letter(Block b) { return static_cast<char>('A' + static_cast<int>(b)); }

std::optional<Block> block_from_letter(char c) {
    if (c >= 'A' && c <= 'G') return static_cast<Block>(c - 'A');
    if (c >= 'a' && c <= 'g') return static_cast<Block>(c - 'a');
    return std::nullopt;
}

const char* block_description(Block b) {
    switch (b) {
        case Block::A: return "lower-unbounded oscillatory";
        case Block::B: return "bounded oscillatory";
        case Block::C: return "upper-unbounded oscillatory";
        case Block::D: return "fully-unbounded oscillatory";
        case Block::E: return "downward divergent";
        case Block::F: return "upward divergent";
        case Block::G: return "finite convergent";
    }
    return "";
}

Block block_of(const LimitProfile& p) {
    const ExtReal& lo = p.lo();
    const ExtReal& hi = p.hi();
    if (lo.is_neg_inf()) {
        if (hi.is_neg_inf()) return Block::E;
        return hi.is_finite() ? Block::A : Block::D;
    }
    if (lo.is_finite()) {
        if (hi.is_pos_inf()) return Block::C;
        return lo.value() == hi.value() ? Block::G : Block::B;
    }
    return Block::F;  // lo = +inf forces hi = +inf
}

const CanonicalSeq& representative(Block b) {
    static const std::array<CanonicalSeq, 7> reps = {
        normalize("n*(sinq(n)-1)"),  // A
        normalize("sinq(n)"),        // B
        normalize("n*(sinq(n)+1)"),  // C
        normalize("n*sinq(n)"),      // D
        normalize("-n"),             // E
        normalize("n"),              // F
        normalize("1/n"),            // G
    };
    return reps[static_cast<std::size_t>(b)];
}

CanonicalSeq representative_shifted(Block b, const Rat& alpha) {
    if (alpha <= 0 || alpha >= 1)
        throw std::domain_error("shift amount must lie strictly between 0 and 1");
    return representative(b).shifted(alpha);
}

namespace {

struct WitnessPieces {
    CanonicalSeq x, y;
};

// Explicit counterexample pairs used when a union containing G fails to be a
// subspace: each pair lies in the named blocks and sums into a block that the
// decision tree guarantees to be outside the union.
WitnessPieces pair_d_to_e() {
    return {normalize("altsign(n)*n^2"), normalize("-altsign(n)*n^2 - n")};
}
WitnessPieces pair_ef_to_b() { return {normalize("-n"), normalize("n + sinq(n)")}; }
WitnessPieces pair_df_to_c() { return {normalize("altsign(n)*n"), normalize("n")}; }
WitnessPieces pair_ac_to_d() {
    return {representative(Block::A), representative(Block::C)};
}
WitnessPieces pair_ef_to_d() {
    return {normalize("piecewise(mod 2; -n, -n^2)"), normalize("piecewise(mod 2; n^2, n)")};
}

SubspaceVerdict checked_addition_escape(const std::set<Block>& m, WitnessPieces p) {
    SubspaceVerdict v;
    v.is_subspace = false;
    v.witness = SubspaceVerdict::Witness::AdditionEscape;
    v.x = std::move(p.x);
    v.y = std::move(p.y);
    v.result = add(v.x, v.y);
    v.x_block = block_of(v.x);
    v.y_block = block_of(v.y);
    v.result_block = block_of(v.result);
    if (!m.count(v.x_block) || !m.count(v.y_block) || m.count(v.result_block))
        throw std::logic_error("subspace witness failed re-verification");
    return v;
}

SubspaceVerdict checked_scalar_escape(const std::set<Block>& m, CanonicalSeq x, const Rat& lambda) {
    SubspaceVerdict v;
    v.is_subspace = false;
    v.witness = SubspaceVerdict::Witness::ScalarEscape;
    v.x = std::move(x);
    v.lambda = lambda;
    v.result = v.x.scaled(lambda);
    v.x_block = block_of(v.x);
    v.result_block = block_of(v.result);
    if (!m.count(v.x_block) || m.count(v.result_block))
        throw std::logic_error("subspace witness failed re-verification");
    return v;
}

}  // namespace

SubspaceVerdict union_is_subspace(const std::set<Block>& m) {
    if (m.empty()) throw std::invalid_argument("union of blocks must be nonempty");

    auto has = [&](Block b) { return m.count(b) > 0; };

    // Scalar closure under 0: any member scaled by 0 is the zero sequence,
    // which converges, so a subspace must contain G.
    if (!has(Block::G)) {
        SubspaceVerdict v;
        v.is_subspace = false;
        v.witness = SubspaceVerdict::Witness::ZeroMissing;
        v.x = representative(*m.begin());
        v.lambda = 0;
        v.result = v.x.scaled(Rat(0));
        v.x_block = block_of(v.x);
        v.result_block = block_of(v.result);
        if (!m.count(v.x_block) || m.count(v.result_block) || v.result_block != Block::G)
            throw std::logic_error("subspace witness failed re-verification");
        return v;
    }

    // Closure under negation exchanges A with C and E with F.
    if (has(Block::A) != has(Block::C))
        return checked_scalar_escape(m, representative(has(Block::A) ? Block::A : Block::C),
                                     Rat(-1));
    if (has(Block::E) != has(Block::F))
        return checked_scalar_escape(m, representative(has(Block::E) ? Block::E : Block::F),
                                     Rat(-1));

    bool ac = has(Block::A), ef = has(Block::E), d = has(Block::D), b = has(Block::B);

    if (d) {
        if (!ef) return checked_addition_escape(m, pair_d_to_e());
        if (!b) return checked_addition_escape(m, pair_ef_to_b());
        if (!ac) return checked_addition_escape(m, pair_df_to_c());
        // A..G all present: the whole space.
        SubspaceVerdict v;
        v.is_subspace = true;
        return v;
    }
    if (ac) return checked_addition_escape(m, pair_ac_to_d());
    if (ef) return checked_addition_escape(m, pair_ef_to_d());

    // Only G or B u G remain: the convergent and the bounded sequences.
    SubspaceVerdict v;
    v.is_subspace = true;
    return v;
}

}  // namespace seqblocks
