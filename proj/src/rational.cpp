#include "seqblocks/rational.hpp"

#include <sstream>

namespace seqblocks {

Rat rat_pow(const Rat& base, std::int64_t e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("rat_pow: negative power of zero");
        return Rat(0);
    }
    unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
    Int num = boost::multiprecision::pow(numerator(base), k);
    Int den = boost::multiprecision::pow(denominator(base), k);
    return e < 0 ? Rat(den, num) : Rat(num, den);
}

Int rat_floor(const Rat& q) {
    Int n = numerator(q), d = denominator(q);
    Int quot = n / d;
    if (n < 0 && quot * d != n) --quot;
    return quot;
}

Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

std::string rat_to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rat rat_from_string(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("not a rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    std::size_t slash = text.find('/');
    if (slash != std::string::npos) {
        std::string np = text.substr(0, slash), dp = text.substr(slash + 1);
        if (np.empty() || dp.empty()) throw bad();
        try {
            Int n(np), d(dp);
            if (d == 0) throw bad();
            return Rat(n, d);
        } catch (const std::runtime_error&) {
            throw bad();
        }
    }
    std::size_t dot = text.find('.');
    if (dot != std::string::npos) {
        std::string ip = text.substr(0, dot), fp = text.substr(dot + 1);
        if (fp.empty()) throw bad();
        bool neg = !ip.empty() && ip[0] == '-';
        if (neg) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        for (char c : ip + fp)
            if (c < '0' || c > '9') throw bad();
        Int scale = boost::multiprecision::pow(Int(10), static_cast<unsigned>(fp.size()));
        Int num = Int(ip) * scale + Int(fp);
        Rat r(num, scale);
        return neg ? Rat(-r) : r;
    }
    try {
        return Rat(Int(text));
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

double rat_to_double(const Rat& q) { return q.convert_to<double>(); }

}  // namespace seqblocks
