#include "chaingame/dyadic.hpp"

#include <cmath>

namespace chaingame {

DyadicRational::DyadicRational(long long value) : num_(value), exp_(0) {}

DyadicRational::DyadicRational(BigInt numerator, unsigned exponent)
    : num_(std::move(numerator)), exp_(exponent)
{
    normalize();
}

void DyadicRational::normalize()
{
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    if (exp_ == 0) return;
    const unsigned tz = static_cast<unsigned>(boost::multiprecision::lsb(abs(num_)));
    const unsigned shift = tz < exp_ ? tz : exp_;
    num_ >>= shift;
    exp_ -= shift;
}

DyadicRational DyadicRational::half() const
{
    if (num_ == 0) return {};
    DyadicRational out = *this;
    ++out.exp_;
    out.normalize();
    return out;
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& rhs)
{
    if (exp_ >= rhs.exp_) {
        num_ += rhs.num_ << (exp_ - rhs.exp_);
    } else {
        num_ = (num_ << (rhs.exp_ - exp_)) + rhs.num_;
        exp_ = rhs.exp_;
    }
    normalize();
    return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& rhs)
{
    return *this += -rhs;
}

DyadicRational DyadicRational::operator-() const
{
    DyadicRational out = *this;
    out.num_ = -out.num_;
    return out;
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b)
{
    const unsigned e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    const BigInt lhs = a.num_ << (e - a.exp_);
    const BigInt rhs = b.num_ << (e - b.exp_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double DyadicRational::toDouble() const
{
    if (num_ == 0) return 0.0;
    // Keep 62 significant bits before handing over to floating point.
    BigInt n = abs(num_);
    long shift = 0;
    const long bits = static_cast<long>(boost::multiprecision::msb(n)) + 1;
    if (bits > 62) {
        shift = bits - 62;
        n >>= static_cast<unsigned>(shift);
    }
    double v = std::ldexp(static_cast<double>(n.convert_to<unsigned long long>()),
                          static_cast<int>(shift - static_cast<long>(exp_)));
    return num_.sign() < 0 ? -v : v;
}

std::string DyadicRational::str() const
{
    if (exp_ == 0) return num_.str();
    BigInt den = BigInt(1) << exp_;
    return num_.str() + "/" + den.str();
}

} // namespace chaingame
