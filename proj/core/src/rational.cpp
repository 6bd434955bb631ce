#include "stellat/rational.hpp"

#include "stellat/errors.hpp"

#include <ostream>

namespace stellat {

Rational::Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(BigInt num, BigInt den) {
    if (den == 0) throw InvariantViolation("Rational: zero denominator");
    v_ = BigRat(std::move(num), std::move(den));
}

Rational Rational::parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigRat(BigInt(s)));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        return Rational(std::move(num), std::move(den));
    } catch (const std::exception&) {
        throw InvariantViolation("Rational: cannot parse '" + s + "'");
    }
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw InvariantViolation("Rational: division by zero");
    return Rational(BigRat(a.v_ / b.v_));
}

std::string Rational::str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

} // namespace stellat
