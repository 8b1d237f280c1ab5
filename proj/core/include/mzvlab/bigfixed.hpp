#pragma once

#include <string>
#include <string_view>

#include "mzvlab/rational.hpp"

namespace mzvlab {

// Decimal fixed-point real: mantissa * 10^(-scale). All rounding is toward
// zero unless stated otherwise, so every operation is exact to 1 ulp.
// Accuracy-critical code never touches binary floating point.
class BigFixed {
public:
    BigFixed() = default;
    BigFixed(BigInt mantissa, int scale) : mant_(std::move(mantissa)), scale_(scale) {}

    static BigFixed zero(int scale) { return BigFixed(BigInt(0), scale); }
    static BigFixed one(int scale) { return BigFixed(pow10(static_cast<unsigned long>(scale)), scale); }
    static BigFixed from_int(long v, int scale);
    static BigFixed from_rational(const Rational& q, int scale);

    const BigInt& mantissa() const { return mant_; }
    int scale() const { return scale_; }
    bool is_negative() const { return sgn(mant_) < 0; }
    int sign() const { return sgn(mant_); }

    // Change scale; dropping digits truncates toward zero.
    BigFixed rescaled(int new_scale) const;
    // Round half away from zero to the given number of fractional digits.
    BigFixed rounded(int digits) const;

    BigFixed operator-() const { return BigFixed(-mant_, scale_); }
    BigFixed& operator+=(const BigFixed& o);
    BigFixed& operator-=(const BigFixed& o);
    friend BigFixed operator+(BigFixed a, const BigFixed& b) { return a += b; }
    friend BigFixed operator-(BigFixed a, const BigFixed& b) { return a -= b; }

    // Full product truncated back to this value's scale.
    friend BigFixed mul(const BigFixed& a, const BigFixed& b);
    // Exact small-integer scaling / 1-ulp division.
    BigFixed mul_int(long v) const { return BigFixed(mant_ * v, scale_); }
    BigFixed div_int(unsigned long v) const;
    // mantissa * num / den, truncated: 1 ulp.
    BigFixed mul_rational(const Rational& q) const;

    BigFixed abs() const { return BigFixed(::abs(mant_), scale_); }
    // |value| < 10^exp (exp may be negative).
    bool abs_less_pow10(int exp) const;
    int compare(const BigFixed& o) const;

    // Fixed-point text form: optional '-', integer digits, '.', exactly
    // `scale` fractional digits. parse() is its exact inverse.
    std::string str() const;
    static BigFixed parse(std::string_view text);

    friend bool operator==(const BigFixed& a, const BigFixed& b) {
        return a.scale_ == b.scale_ && a.mant_ == b.mant_;
    }

private:
    BigInt mant_;
    int scale_ = 0;
};

}  // namespace mzvlab
