#ifndef SEQBLOCKS_EXTREAL_HPP
#define SEQBLOCKS_EXTREAL_HPP

#include "seqblocks/rational.hpp"

#include <compare>
#include <string>

namespace seqblocks {

/// A value in the extended real line: -inf, a rational, or +inf.
class ExtReal {
  public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtReal() : kind_(Kind::Finite), value_(0) {}
    ExtReal(Rat v) : kind_(Kind::Finite), value_(std::move(v)) {}

    static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }
    static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }
    static ExtReal finite(Rat v) { return ExtReal(std::move(v)); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }

    // Only valid on finite values.
    const Rat& value() const;

    // Adding a finite rational leaves infinities fixed. There is deliberately
    // no ExtReal + ExtReal: no construction in scope ever needs inf + inf.
    ExtReal operator+(const Rat& a) const;
    ExtReal operator-() const;

    bool operator==(const ExtReal& o) const {
        if (kind_ != o.kind_) return false;
        return kind_ != Kind::Finite || value_ == o.value_;
    }
    bool operator<(const ExtReal& o) const;
    bool operator<=(const ExtReal& o) const { return *this == o || *this < o; }
    bool operator>(const ExtReal& o) const { return o < *this; }
    bool operator>=(const ExtReal& o) const { return o <= *this; }

    // "-inf", "+inf", or the exact fraction.
    std::string str() const;

  private:
    explicit ExtReal(Kind k) : kind_(k), value_(0) {}
    Kind kind_;
    Rat value_;
};

/// The pair (liminf, limsup) of a sequence. Always lo <= hi.
class LimitProfile {
  public:
    LimitProfile(ExtReal lo, ExtReal hi);

    const ExtReal& lo() const { return lo_; }
    const ExtReal& hi() const { return hi_; }

    bool operator==(const LimitProfile& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

    std::string str() const { return "(" + lo_.str() + ", " + hi_.str() + ")"; }

  private:
    ExtReal lo_, hi_;
};

}  // namespace seqblocks

#endif
