#include "seqblocks/coding.hpp"

#include <stdexcept>
#include <vector>

namespace seqblocks {

Rat sigma(const Rat& x) { return (1 + x / (1 + rat_abs(x))) / 2; }

Rat sigma_inv(const Rat& y) {
    if (y <= 0 || y >= 1) throw std::domain_error("sigma_inv is defined on (0, 1)");
    Rat t = 2 * y - 1;  // t in (-1, 1), equal to x / (1 + |x|)
    return t / (1 - rat_abs(t));
}

Code encode_weighted(const Sequence& a, std::int64_t K) {
    if (K < 1) throw std::domain_error("code depth must be >= 1");
    // The weight denominators are 2^(2^K); past this cap they no longer fit
    // in memory comfortably and carry no extra information at desk scale.
    if (K > 24) throw std::domain_error("weighted coder depth is capped at 24");
    Rat sum = 0;
    for (std::int64_t n = 1; n <= K; ++n) {
        unsigned bits = 1u << static_cast<unsigned>(n);  // 2^n
        Rat weight(Int(1), Int(1) << bits);
        sum += weight * sigma(a.at(n));
    }
    return {sum, K, Coder::Weighted, 0};
}

namespace {

// First `count` binary digits of a value in (0, 1).
std::vector<bool> binary_digits(Rat value, std::int64_t count) {
    std::vector<bool> digits;
    digits.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        value *= 2;
        bool bit = value >= 1;
        if (bit) value -= 1;
        digits.push_back(bit);
    }
    return digits;
}

}  // namespace

Code encode_interleaved(const Sequence& a, std::int64_t K, std::int64_t D) {
    if (K < 1 || D < 1) throw std::domain_error("code depth and digit count must be >= 1");
    std::vector<std::vector<bool>> grid;
    grid.reserve(static_cast<std::size_t>(K));
    for (std::int64_t n = 1; n <= K; ++n) grid.push_back(binary_digits(sigma(a.at(n)), D));

    // Anti-diagonal walk over the K x D grid; cell (row, col) sits on
    // diagonal row + col, ordered by increasing column within a diagonal.
    Rat value = 0;
    Rat weight(1, 2);
    for (std::int64_t s = 2; s <= K + D; ++s) {
        for (std::int64_t col = std::max<std::int64_t>(1, s - K);
             col <= std::min<std::int64_t>(D, s - 1); ++col) {
            std::int64_t row = s - col;
            if (grid[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)])
                value += weight;
            weight /= 2;
        }
    }
    if (value == 0)
        throw std::domain_error(
            "interleaved code is zero: all sigma digits vanish at this digit depth; "
            "increase the digit count");
    return {value, K, Coder::Interleaved, D};
}

Code encode(const Sequence& a, const CoderConfig& cfg) {
    return cfg.coder == Coder::Weighted ? encode_weighted(a, cfg.depth)
                                        : encode_interleaved(a, cfg.depth, cfg.digits);
}

namespace {

CanonicalSeq two_class(ClassPoly even, ClassPoly odd) {
    std::vector<ClassPoly> cl(2);
    cl[0] = std::move(even);
    cl[1] = std::move(odd);
    return CanonicalSeq::from_classes(2, std::move(cl));
}

}  // namespace

TransferImage t_map(Block x, const Code& code) {
    const Rat& c = code.value;
    if (c <= 0 || c >= 1) throw std::domain_error("code value must lie in (0, 1)");
    CanonicalSeq image;
    switch (x) {
        case Block::G: image = CanonicalSeq::constant(c); break;
        case Block::F:
            image = CanonicalSeq::from_classes(1, {{{Rat(1), 1}, {c, 0}}});
            break;
        case Block::E:
            image = CanonicalSeq::from_classes(1, {{{Rat(-1), 1}, {Rat(-c), 0}}});
            break;
        case Block::D:
            // Position 2k carries k + c, position 2k-1 carries -k - c.
            image = two_class({{Rat(1, 2), 1}, {c, 0}},
                              {{Rat(-1, 2), 1}, {Rat(-c - Rat(1, 2)), 0}});
            break;
        case Block::C:
            image = two_class({{Rat(1, 2), 1}}, {{c, 0}, {Rat(1), -1}});
            break;
        case Block::B:
            image = two_class({{Rat(c + 1), 0}, {Rat(-1), -1}}, {{c, 0}, {Rat(1), -1}});
            break;
        case Block::A:
            image = two_class({{Rat(-1, 2), 1}}, {{c, 0}, {Rat(-1), -1}});
            break;
    }
    if (block_of(image) != x) throw std::logic_error("transfer image failed classification");
    return {x, std::move(image), code};
}

TransferImage transfer(Block y, Block x, const Sequence& a, const CoderConfig& cfg) {
    if (x == y) throw std::invalid_argument("transfer requires two distinct blocks");
    if (a.is_canonical() && block_of(a.canonical()) != y)
        throw std::invalid_argument(std::string("source sequence is not in block ") +
                                    block_letter(y));
    return t_map(x, encode(a, cfg));
}

Rat recover_code(Block x, const CanonicalSeq& image) {
    auto shape_error = [&] {
        return std::invalid_argument(std::string("image does not have the t_map shape for "
                                                 "block ") +
                                     block_letter(x));
    };

    Rat c;
    switch (x) {
        case Block::G: {
            // The image is the constant code.
            if (image.modulus() != 1 || image.cls(0).size() != 1) throw shape_error();
            c = image.cls(0)[0].coeff;
            break;
        }
        case Block::F:
        case Block::E: {
            // c = image_n - n, resp. c = -image_n - n.
            if (image.modulus() != 1 || image.cls(0).size() != 2) throw shape_error();
            c = image.cls(0)[1].coeff;
            if (x == Block::E) c = -c;
            break;
        }
        case Block::D: {
            // c = lim (image_{2k} - k): the constant offset of the even class.
            if (image.modulus() != 2 || image.cls(0).size() != 2) throw shape_error();
            c = image.cls(0)[1].coeff;
            break;
        }
        case Block::C: {
            // c = lim over the odd class.
            if (image.modulus() != 2) throw shape_error();
            ExtReal l = class_limit(image.cls(1));
            if (!l.is_finite()) throw shape_error();
            c = l.value();
            break;
        }
        case Block::B: {
            // c = liminf of the image.
            ExtReal l = exact_profile(image).lo();
            if (!l.is_finite()) throw shape_error();
            c = l.value();
            break;
        }
        case Block::A: {
            // c = limsup of the image.
            ExtReal h = exact_profile(image).hi();
            if (!h.is_finite()) throw shape_error();
            c = h.value();
            break;
        }
    }
    if (c <= 0 || c >= 1) throw shape_error();
    Code code{c, 1, Coder::Interleaved, 1};
    if (t_map(x, code).seq != image) throw shape_error();
    return c;
}

AdjMatrix7 macro_matrix() {
    AdjMatrix7 u;
    for (Block y : kAllBlocks)
        for (Block x : kAllBlocks)
            if (x != y) u.set(y, x, true);
    return u;
}

}  // namespace seqblocks
