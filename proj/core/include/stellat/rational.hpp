#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace stellat {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact rational number. Always stored reduced with positive denominator
/// (cpp_rational maintains both). Frequencies and periods are kept in this
/// type so that term merging and period detection are exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}                    // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);
    explicit Rational(BigRat v) : v_(std::move(v)) {}
    Rational(BigInt num, BigInt den);

    /// Parses "p/q" or "p" with arbitrary-precision integers.
    static Rational parse(const std::string& s);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }
    const BigRat& raw() const { return v_; }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(BigRat(-v_)); }
    Rational abs() const { return v_ < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(BigRat(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(BigRat(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(BigRat(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Nearest double (rounding direction unspecified; callers needing a
    /// certified enclosure must pad, see interval.hpp).
    double to_double() const { return v_.convert_to<double>(); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    BigRat v_;
};

/// lcm of denominators / gcd of (scaled) numerators helpers used by the
/// period reduction of trigonometric polynomials.
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

} // namespace stellat
