#include "seqblocks/connectors.hpp"

#include "seqblocks/normalize.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqblocks {

const char* obstruction_reason_name(ObstructionReason r) {
    switch (r) {
        case ObstructionReason::InfinitelyManyZeros: return "InfinitelyManyZeros";
        case ObstructionReason::EventuallyZeroSource: return "EventuallyZeroSource";
        case ObstructionReason::SourceIsZero: return "SourceIsZero";
    }
    return "";
}

SupportAnalysis support_analysis(const CanonicalSeq& a) {
    SupportAnalysis out;
    out.classes.resize(static_cast<std::size_t>(a.modulus()));
    bool all_zero = true;
    for (std::int64_t r = 0; r < a.modulus(); ++r) {
        ClassSupport& cs = out.classes[static_cast<std::size_t>(r)];
        const ClassPoly& p = a.cls(r);
        if (p.empty()) {
            cs.identically_zero = true;
            out.has_infinitely_many_zeros = true;
            if (!out.zero_class) out.zero_class = r;
            continue;
        }
        all_zero = false;
        // Beyond n* = floor(S / |c0|) + 1 the leading term strictly dominates
        // the sum of the remaining ones (their exponents are all at least one
        // lower), so the class cannot vanish there.
        Rat tail_sum = 0;
        for (std::size_t i = 1; i < p.size(); ++i) tail_sum += rat_abs(p[i].coeff);
        cs.bound = rat_floor(tail_sum / rat_abs(p[0].coeff)).convert_to<std::int64_t>() + 1;
        // Exhaustive scan of the class members up to the bound.
        std::int64_t start = r == 0 ? a.modulus() : r;
        for (std::int64_t n = start; n <= cs.bound; n += a.modulus())
            if (poly_eval(p, n) == 0) cs.transient_zeros.push_back(n);
    }
    out.eventually_zero = all_zero;
    return out;
}

namespace {

// Connector class term making the product land on `target_lead` times the
// class's own lower-order noise: with p = c0*n^e0 + ..., the term
// (t/c0) * n^(k - e0) turns the product into t*n^k + (dominated tail).
Term inverted_lead(const ClassPoly& p, const Rat& t, std::int64_t k) {
    return {t / p[0].coeff, k - p[0].exp};
}

Connector checked_connector(const CanonicalSeq& a, CanonicalSeq c, ConnectorPattern pattern,
                            Block target) {
    CanonicalSeq product = mul(a, c);
    if (block_of(product) != target)
        throw std::logic_error("constructed connector failed classification");
    return {std::move(c), pattern, target};
}

Block pattern_block(ConnectorPattern p) {
    switch (p) {
        case ConnectorPattern::A: return Block::A;
        case ConnectorPattern::B: return Block::B;
        case ConnectorPattern::C: return Block::C;
        case ConnectorPattern::D: return Block::D;
        default: throw std::invalid_argument("not a profile pattern");
    }
}

}  // namespace

Connector pattern_connector(const CanonicalSeq& a, ConnectorPattern pattern) {
    Block target = pattern_block(pattern);
    SupportAnalysis sa = support_analysis(a);
    if (sa.eventually_zero)
        throw std::invalid_argument("pattern connectors need a source that is not eventually zero");

    std::int64_t m = a.modulus();
    bool two_sided = pattern == ConnectorPattern::B || pattern == ConnectorPattern::D;
    std::int64_t big = two_sided ? 4 * m : 2 * m;
    // Exponent of the product's leading term: 1 for the divergent patterns,
    // 0 where the class limit must be a finite nonzero value.
    std::int64_t k = pattern == ConnectorPattern::B ? 0 : 1;

    std::vector<ClassPoly> cl(static_cast<std::size_t>(big));
    for (std::int64_t rho = 0; rho < big; ++rho) {
        std::int64_t r = rho % m;
        if (sa.classes[static_cast<std::size_t>(r)].identically_zero) continue;
        const ClassPoly& p = a.cls(r);
        switch (pattern) {
            case ConnectorPattern::A:
                // Used half of the support drives the product to -inf; the
                // other half stays zero, pinning the limsup at 0.
                if (rho == r) cl[static_cast<std::size_t>(rho)] = {inverted_lead(p, Rat(-1), k)};
                break;
            case ConnectorPattern::C:
                if (rho == r) cl[static_cast<std::size_t>(rho)] = {inverted_lead(p, Rat(1), k)};
                break;
            case ConnectorPattern::B:
            case ConnectorPattern::D:
                // Two-way split of the used part: one quarter tends to the
                // positive target, one to the negative, two stay zero.
                if (rho == r)
                    cl[static_cast<std::size_t>(rho)] = {inverted_lead(p, Rat(1), k)};
                else if (rho == r + 2 * m)
                    cl[static_cast<std::size_t>(rho)] = {inverted_lead(p, Rat(-1), k)};
                break;
            default: break;
        }
    }
    return checked_connector(a, CanonicalSeq::from_classes(big, std::move(cl)), pattern, target);
}

std::variant<Connector, Obstruction> connect(const CanonicalSeq& a, Block target) {
    if (target == Block::G)
        return checked_connector(a, CanonicalSeq::zero(), ConnectorPattern::ZeroToG, Block::G);
    if (a.is_zero()) return Obstruction{ObstructionReason::SourceIsZero, target, std::nullopt};

    switch (target) {
        case Block::A: return pattern_connector(a, ConnectorPattern::A);
        case Block::B: return pattern_connector(a, ConnectorPattern::B);
        case Block::C: return pattern_connector(a, ConnectorPattern::C);
        case Block::D: return pattern_connector(a, ConnectorPattern::D);
        default: break;
    }

    // Targets E and F need the product to diverge, which a source with
    // infinitely many zeros can never deliver.
    SupportAnalysis sa = support_analysis(a);
    if (sa.has_infinitely_many_zeros)
        return Obstruction{ObstructionReason::InfinitelyManyZeros, target, sa.zero_class};

    Block source_block = block_of(a);
    if ((target == Block::F && source_block == Block::E) ||
        (target == Block::E && source_block == Block::F)) {
        return checked_connector(a, CanonicalSeq::constant(Rat(-1)), ConnectorPattern::NegateEF,
                                 target);
    }

    // Every class is nonzero beyond its bound: invert each leading term so
    // the product's classes all become +/-n plus dominated lower terms.
    Rat sign = target == Block::F ? Rat(1) : Rat(-1);
    std::vector<ClassPoly> cl(static_cast<std::size_t>(a.modulus()));
    for (std::int64_t r = 0; r < a.modulus(); ++r)
        cl[static_cast<std::size_t>(r)] = {inverted_lead(a.cls(r), sign, 1)};
    return checked_connector(a, CanonicalSeq::from_classes(a.modulus(), std::move(cl)),
                             ConnectorPattern::DominateEF, target);
}

namespace {

// Deterministic members of a block exercised by the matrix certification:
// the representative, two shifts, two positive scalings, and the zero-rich
// counterexample member where the block has one.
std::vector<CanonicalSeq> certification_members(Block x) {
    const CanonicalSeq& rep = representative(x);
    std::vector<CanonicalSeq> members = {
        rep,
        representative_shifted(x, Rat(1, 2)),
        representative_shifted(x, Rat(1, 3)),
        rep.scaled(Rat(2)),
        rep.scaled(Rat(3)),
    };
    switch (x) {
        case Block::A: members.push_back(normalize("piecewise(mod 2; 0, -n)")); break;
        case Block::B: members.push_back(normalize("piecewise(mod 2; 0, 1)")); break;
        case Block::C: members.push_back(normalize("piecewise(mod 2; 0, n)")); break;
        case Block::D:
            members.push_back(normalize("piecewise(mod 3; n/3, -(n+2)/3, 0)"));
            break;
        case Block::G: members.push_back(CanonicalSeq::zero()); break;
        default: break;  // E and F cannot contain zero-rich sequences
    }
    for (const CanonicalSeq& s : members)
        if (block_of(s) != x) throw std::logic_error("certification member left its block");
    return members;
}

MicroEntry certify_pair(Block x, Block y) {
    MicroEntry entry;
    entry.source = x;
    entry.target = y;
    entry.connected = true;
    for (CanonicalSeq& member : certification_members(x)) {
        auto result = connect(member, y);
        if (auto* obs = std::get_if<Obstruction>(&result)) {
            entry.connected = false;
            entry.members.clear();
            entry.connectors.clear();
            entry.witness = std::move(member);
            entry.obstruction = *obs;
            break;
        }
        entry.members.push_back(std::move(member));
        entry.connectors.push_back(std::move(std::get<Connector>(result)));
    }
    return entry;
}

}  // namespace

MicroResult micro_matrix(bool parallel) {
    std::vector<std::pair<Block, Block>> pairs;
    for (Block x : kAllBlocks)
        for (Block y : kAllBlocks)
            if (x != y) pairs.emplace_back(x, y);

    MicroResult out;
    out.entries.resize(pairs.size());
    const std::int64_t count = static_cast<std::int64_t>(pairs.size());
    if (parallel) {
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                out.entries[static_cast<std::size_t>(i)] =
                    certify_pair(pairs[static_cast<std::size_t>(i)].first,
                                 pairs[static_cast<std::size_t>(i)].second);
            } catch (...) {
#pragma omp critical
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
    } else {
        for (std::int64_t i = 0; i < count; ++i)
            out.entries[static_cast<std::size_t>(i)] =
                certify_pair(pairs[static_cast<std::size_t>(i)].first,
                             pairs[static_cast<std::size_t>(i)].second);
    }
    for (const MicroEntry& e : out.entries)
        if (e.connected) out.matrix.set(e.source, e.target, true);
    return out;
}

}  // namespace seqblocks
