#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace prefmatch {

/// Exact rational with 64-bit numerator/denominator, normalized so that the
/// denominator is positive and gcd(|num|, den) == 1. Large enough for every
/// quantity in this library (rank sums, vote margins, AUPC values); inputs
/// are small integers, never products of products.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    static Rational integer(std::int64_t v) { return Rational(v, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Fixed-point decimal with `digits` fractional digits, round half away
    /// from zero. Used for CSV serialization.
    std::string to_decimal(int digits) const;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // cross-multiplication in 128 bits; operands are far below 2^63
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs < rhs ? std::strong_ordering::less
                         : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

  private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace prefmatch
