#pragma once

#include "stellat/rational.hpp"

#include <cmath>
#include <limits>

namespace stellat {

/// Closed interval [lo, hi] with outward-rounded arithmetic.
///
/// Every operation returns an interval that contains the exact result for
/// all inputs in the operand intervals. Rounding is handled by nextafter
/// padding of round-to-nearest results; transcendental functions get extra
/// padding to cover libm's few-ulp error. Division by an interval containing
/// zero yields a huge (but finite) interval so that branch-and-bound keeps
/// subdividing instead of propagating NaNs.
struct Ivl {
    double lo = 0.0;
    double hi = 0.0;

    Ivl() = default;
    Ivl(double l, double h) : lo(l), hi(h) {}
    static Ivl point(double x) { return {x, x}; }

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
};

namespace ivl {

inline constexpr double kHuge = std::numeric_limits<double>::max() / 4;

inline double next_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
inline double next_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }

// pi enclosures (nearest double to pi is below it)
inline constexpr double kPi = 3.14159265358979323846;
inline Ivl pi() { return {kPi, next_up(kPi)}; }
inline Ivl two_pi() { return {next_down(2 * kPi), next_up(2 * kPi)}; }

Ivl neg(const Ivl& a);
Ivl add(const Ivl& a, const Ivl& b);
Ivl sub(const Ivl& a, const Ivl& b);
Ivl mul(const Ivl& a, const Ivl& b);
Ivl div(const Ivl& a, const Ivl& b);
Ivl sqr(const Ivl& a);
Ivl sqrt(const Ivl& a);  // clamps negative lower bounds at 0
Ivl abs(const Ivl& a);
Ivl scale(const Ivl& a, double s);
Ivl hull(const Ivl& a, const Ivl& b);

/// Rigorous enclosures of cos/sin over an interval; sound for all finite
/// arguments, tight for widths below 2*pi.
Ivl cos(const Ivl& x);
Ivl sin(const Ivl& x);

/// Enclosure of an exact rational as a double interval.
Ivl from_rational(const Rational& r);

} // namespace ivl

} // namespace stellat
