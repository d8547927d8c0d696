#include "seqblocks/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace seqblocks {

ClassPoly poly_normalize(ClassPoly terms) {
    std::map<std::int64_t, Rat> by_exp;
    for (auto& t : terms) by_exp[t.exp] += t.coeff;
    ClassPoly out;
    for (auto it = by_exp.rbegin(); it != by_exp.rend(); ++it)
        if (it->second != 0) out.push_back({it->second, it->first});
    return out;
}

ClassPoly poly_add(const ClassPoly& a, const ClassPoly& b) {
    ClassPoly all = a;
    all.insert(all.end(), b.begin(), b.end());
    return poly_normalize(std::move(all));
}

ClassPoly poly_mul(const ClassPoly& a, const ClassPoly& b) {
    ClassPoly prod;
    prod.reserve(a.size() * b.size());
    for (const auto& ta : a)
        for (const auto& tb : b) prod.push_back({Rat(ta.coeff * tb.coeff), ta.exp + tb.exp});
    return poly_normalize(std::move(prod));
}

ClassPoly poly_scale(const ClassPoly& a, const Rat& lambda) {
    if (lambda == 0) return {};
    ClassPoly out = a;
    for (auto& t : out) t.coeff *= lambda;
    return out;
}

Rat poly_eval(const ClassPoly& p, std::int64_t n) {
    Rat acc = 0;
    for (const auto& t : p) acc += t.coeff * int_pow(n, t.exp);
    return acc;
}

namespace {

// Least divisor d of m such that classes repeat with period d.
std::int64_t least_period(std::int64_t m, const std::vector<ClassPoly>& classes) {
    for (std::int64_t d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        bool ok = true;
        for (std::int64_t r = d; r < m && ok; ++r)
            if (classes[static_cast<std::size_t>(r)] != classes[static_cast<std::size_t>(r % d)])
                ok = false;
        if (ok) return d;
    }
    return m;
}

}  // namespace

CanonicalSeq CanonicalSeq::from_classes(std::int64_t modulus, std::vector<ClassPoly> classes) {
    if (modulus < 1 || classes.size() != static_cast<std::size_t>(modulus))
        throw std::invalid_argument("canonical form needs one class per residue");
    for (auto& c : classes) c = poly_normalize(std::move(c));
    std::int64_t d = least_period(modulus, classes);
    CanonicalSeq s;
    s.modulus_ = d;
    s.classes_.assign(classes.begin(), classes.begin() + d);
    return s;
}

CanonicalSeq CanonicalSeq::constant(const Rat& c) { return monomial(c, 0); }

CanonicalSeq CanonicalSeq::monomial(const Rat& c, std::int64_t e) {
    CanonicalSeq s;
    if (c != 0) s.classes_[0].push_back({c, e});
    return s;
}

Rat CanonicalSeq::eval(std::int64_t n) const {
    if (n < 1) throw std::domain_error("sequence index must be >= 1");
    return poly_eval(classes_[static_cast<std::size_t>(n % modulus_)], n);
}

bool CanonicalSeq::is_zero() const {
    return std::all_of(classes_.begin(), classes_.end(),
                       [](const ClassPoly& p) { return p.empty(); });
}

CanonicalSeq CanonicalSeq::negated() const { return scaled(Rat(-1)); }

CanonicalSeq CanonicalSeq::scaled(const Rat& lambda) const {
    std::vector<ClassPoly> cl;
    cl.reserve(classes_.size());
    for (const auto& c : classes_) cl.push_back(poly_scale(c, lambda));
    return from_classes(modulus_, std::move(cl));
}

CanonicalSeq CanonicalSeq::shifted(const Rat& alpha) const {
    if (alpha == 0) return *this;
    std::vector<ClassPoly> cl;
    cl.reserve(classes_.size());
    for (const auto& c : classes_) cl.push_back(poly_add(c, {{alpha, 0}}));
    return from_classes(modulus_, std::move(cl));
}

CanonicalSeq CanonicalSeq::powed(std::int64_t e) const {
    if (e == 0) return constant(Rat(1));
    if (e < 0) {
        if (!single_term())
            throw std::domain_error("negative power requires a single-term c*n^k sequence");
        const Term& t = classes_[0][0];
        return monomial(rat_pow(t.coeff, e), t.exp * e);
    }
    CanonicalSeq acc = constant(Rat(1));
    CanonicalSeq base = *this;
    std::int64_t k = e;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return acc;
}

namespace {

template <typename F>
CanonicalSeq zip_on_lcm(const CanonicalSeq& a, const CanonicalSeq& b, F&& combine_polys) {
    std::int64_t m = std::lcm(a.modulus(), b.modulus());
    std::vector<ClassPoly> cl;
    cl.reserve(static_cast<std::size_t>(m));
    for (std::int64_t r = 0; r < m; ++r)
        cl.push_back(combine_polys(a.cls(r % a.modulus()), b.cls(r % b.modulus())));
    return CanonicalSeq::from_classes(m, std::move(cl));
}

}  // namespace

CanonicalSeq add(const CanonicalSeq& a, const CanonicalSeq& b) { return zip_on_lcm(a, b, poly_add); }

CanonicalSeq mul(const CanonicalSeq& a, const CanonicalSeq& b) { return zip_on_lcm(a, b, poly_mul); }

}  // namespace seqblocks
