#pragma once

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chaingame {

using BigInt = boost::multiprecision::cpp_int;

/// Exact value numerator / 2^exponent, kept with an odd numerator (or zero
/// with exponent 0).
class DyadicRational {
public:
    DyadicRational() = default;
    DyadicRational(long long value); // NOLINT: implicit from integers is intended
    DyadicRational(BigInt numerator, unsigned exponent);

    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }

    bool isZero() const { return num_ == 0; }
    int sign() const { return num_.sign(); }

    DyadicRational half() const;
    DyadicRational& operator+=(const DyadicRational& rhs);
    DyadicRational& operator-=(const DyadicRational& rhs);
    friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) { return a += b; }
    friend DyadicRational operator-(DyadicRational a, const DyadicRational& b) { return a -= b; }
    DyadicRational operator-() const;

    friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
    friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

    double toDouble() const;
    std::string str() const; // "7/8", "3", "-1/2"

private:
    void normalize();

    BigInt num_ = 0;
    unsigned exp_ = 0;
};

} // namespace chaingame
