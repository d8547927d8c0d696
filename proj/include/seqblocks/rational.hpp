#ifndef SEQBLOCKS_RATIONAL_HPP
#define SEQBLOCKS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace seqblocks {

// All certified results are exact; every quantity in the library is a
// Rat or an integer. No floating point on any certified path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rat(Int(num), Int(den));
}

// n^e for n >= 1, any integer e (negative exponents give exact reciprocals).
inline Rat int_pow(std::int64_t n, std::int64_t e) {
    if (n < 1) throw std::domain_error("int_pow: base must be >= 1");
    Int p = boost::multiprecision::pow(Int(n), static_cast<unsigned>(e < 0 ? -e : e));
    return e < 0 ? Rat(Int(1), p) : Rat(p);
}

Rat rat_pow(const Rat& base, std::int64_t e);

// Largest integer <= q.
Int rat_floor(const Rat& q);
// Smallest integer >= q.
Int rat_ceil(const Rat& q);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& q);

// Accepts "p", "p/q" and simple decimals like "0.25". Throws on anything else.
Rat rat_from_string(const std::string& text);

// Decimal rendering for display only (never used in computations).
double rat_to_double(const Rat& q);

}  // namespace seqblocks

#endif
