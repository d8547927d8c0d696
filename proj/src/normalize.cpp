#include "seqblocks/normalize.hpp"

#include "seqblocks/parser.hpp"

#include <numeric>
#include <stdexcept>

namespace seqblocks {

namespace {

CanonicalSeq sinq_canonical() {
    // sin(n*pi/2) as the 4-periodic pattern 0, 1, 0, -1.
    std::vector<ClassPoly> cl(4);
    cl[1] = {{Rat(1), 0}};
    cl[3] = {{Rat(-1), 0}};
    return CanonicalSeq::from_classes(4, std::move(cl));
}

CanonicalSeq altsign_canonical() {
    // (-1)^n as the 2-periodic pattern 1, -1.
    std::vector<ClassPoly> cl(2);
    cl[0] = {{Rat(1), 0}};
    cl[1] = {{Rat(-1), 0}};
    return CanonicalSeq::from_classes(2, std::move(cl));
}

CanonicalSeq invert_single_term(const CanonicalSeq& s) {
    if (!s.single_term())
        throw std::domain_error("divisor did not normalize to a single term c*n^k");
    const Term& t = s.cls(0)[0];
    return CanonicalSeq::monomial(Rat(1) / t.coeff, -t.exp);
}

CanonicalSeq piecewise_canonical(const Expr& e) {
    std::vector<CanonicalSeq> parts;
    parts.reserve(e.branches.size());
    std::int64_t m = e.pw_modulus;
    for (const auto& b : e.branches) {
        parts.push_back(normalize(*b));
        m = std::lcm(m, parts.back().modulus());
    }
    std::vector<ClassPoly> cl;
    cl.reserve(static_cast<std::size_t>(m));
    for (std::int64_t r = 0; r < m; ++r) {
        const CanonicalSeq& branch = parts[static_cast<std::size_t>(r % e.pw_modulus)];
        cl.push_back(branch.cls(r % branch.modulus()));
    }
    return CanonicalSeq::from_classes(m, std::move(cl));
}

}  // namespace

CanonicalSeq normalize(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Number: return CanonicalSeq::constant(e.number);
        case Expr::Kind::Index: return CanonicalSeq::monomial(Rat(1), 1);
        case Expr::Kind::Neg: return normalize(*e.lhs).negated();
        case Expr::Kind::Add: return add(normalize(*e.lhs), normalize(*e.rhs));
        case Expr::Kind::Sub: return add(normalize(*e.lhs), normalize(*e.rhs).negated());
        case Expr::Kind::Mul: return mul(normalize(*e.lhs), normalize(*e.rhs));
        case Expr::Kind::Div:
            return mul(normalize(*e.lhs), invert_single_term(normalize(*e.rhs)));
        case Expr::Kind::Pow: return normalize(*e.lhs).powed(e.pow_exp);
        case Expr::Kind::Sinq: return sinq_canonical();
        case Expr::Kind::AltSign: return altsign_canonical();
        case Expr::Kind::Piecewise: return piecewise_canonical(e);
    }
    throw std::logic_error("unreachable expression kind");
}

CanonicalSeq normalize(const std::string& text) { return normalize(*parse(text)); }

std::string render_poly(const ClassPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p) {
        Rat mag = rat_abs(t.coeff);
        bool negative = t.coeff < 0;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string power;
        if (t.exp == 1)
            power = "n";
        else if (t.exp != 0)
            power = "n^" + std::to_string(t.exp);
        if (power.empty())
            out += rat_to_string(mag);
        else if (mag == 1)
            out += power;
        else
            out += rat_to_string(mag) + "*" + power;
    }
    return out;
}

std::string render(const CanonicalSeq& s) {
    std::string out = "piecewise(mod " + std::to_string(s.modulus()) + "; ";
    for (std::int64_t r = 0; r < s.modulus(); ++r) {
        if (r > 0) out += ", ";
        out += render_poly(s.cls(r));
    }
    out += ")";
    return out;
}

}  // namespace seqblocks
