#include "seqblocks/extreal.hpp"

namespace seqblocks {

const Rat& ExtReal::value() const {
    if (kind_ != Kind::Finite) throw std::logic_error("ExtReal::value on an infinite value");
    return value_;
}

ExtReal ExtReal::operator+(const Rat& a) const {
    if (kind_ == Kind::Finite) return ExtReal(Rat(value_ + a));
    return *this;
}

ExtReal ExtReal::operator-() const {
    switch (kind_) {
        case Kind::NegInf: return pos_inf();
        case Kind::PosInf: return neg_inf();
        default: return ExtReal(Rat(-value_));
    }
}

bool ExtReal::operator<(const ExtReal& o) const {
    if (kind_ == Kind::NegInf) return o.kind_ != Kind::NegInf;
    if (kind_ == Kind::PosInf) return false;
    if (o.kind_ == Kind::PosInf) return true;
    if (o.kind_ == Kind::NegInf) return false;
    return value_ < o.value_;
}

std::string ExtReal::str() const {
    switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "+inf";
        default: return rat_to_string(value_);
    }
}

LimitProfile::LimitProfile(ExtReal lo, ExtReal hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw std::invalid_argument("limit profile requires liminf <= limsup");
}

}  // namespace seqblocks
