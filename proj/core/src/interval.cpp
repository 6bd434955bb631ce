#include "stellat/interval.hpp"

#include <algorithm>

namespace stellat::ivl {

namespace {

// Absolute padding added to libm cos/sin results. glibc keeps these within
// a couple of ulps of the exact value on the whole double range; 1e-15
// covers that for values bounded by 1.
constexpr double kTrigPad = 1e-15;

double pad_up(double x) { return next_up(x); }
double pad_down(double x) { return next_down(x); }

} // namespace

Ivl neg(const Ivl& a) { return {-a.hi, -a.lo}; }

Ivl add(const Ivl& a, const Ivl& b) { return {pad_down(a.lo + b.lo), pad_up(a.hi + b.hi)}; }

Ivl sub(const Ivl& a, const Ivl& b) { return {pad_down(a.lo - b.hi), pad_up(a.hi - b.lo)}; }

Ivl mul(const Ivl& a, const Ivl& b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    const double lo = std::min(std::min(p1, p2), std::min(p3, p4));
    const double hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {pad_down(lo), pad_up(hi)};
}

Ivl div(const Ivl& a, const Ivl& b) {
    if (b.lo <= 0.0 && b.hi >= 0.0) return {-kHuge, kHuge};
    const double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
    const double lo = std::min(std::min(q1, q2), std::min(q3, q4));
    const double hi = std::max(std::max(q1, q2), std::max(q3, q4));
    return {pad_down(lo), pad_up(hi)};
}

Ivl sqr(const Ivl& a) {
    const double l = std::fabs(a.lo), h = std::fabs(a.hi);
    const double m = std::max(l, h);
    double hi = m * m;
    if (!std::isfinite(hi)) hi = std::numeric_limits<double>::max();
    if (a.lo <= 0.0 && a.hi >= 0.0) return {0.0, pad_up(hi)};
    const double n = std::min(l, h);
    return {std::max(0.0, pad_down(n * n)), pad_up(hi)};
}

Ivl sqrt(const Ivl& a) {
    const double lo = a.lo <= 0.0 ? 0.0 : pad_down(std::sqrt(a.lo));
    const double hi = a.hi <= 0.0 ? 0.0 : pad_up(std::sqrt(a.hi));
    return {std::max(0.0, lo), hi};
}

Ivl abs(const Ivl& a) {
    if (a.lo >= 0.0) return a;
    if (a.hi <= 0.0) return neg(a);
    return {0.0, std::max(-a.lo, a.hi)};
}

Ivl scale(const Ivl& a, double s) { return mul(a, Ivl::point(s)); }

Ivl hull(const Ivl& a, const Ivl& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

namespace {

// Does some integer k with parity `parity` and k*pi possibly inside [x]
// exist? Conservative: uncertainty widens the answer towards "yes", which
// only loosens the enclosure. The slack covers both the division and the
// k*pi product error for |x| well beyond any radius this library produces.
bool pi_multiple_inside(const Ivl& x, int parity) {
    const double inv_pi = 1.0 / kPi;
    const double slack = 1e-9 * (1.0 + x.mag() * 1e-4) + 1e-12;
    long long k0 = static_cast<long long>(std::floor(x.lo * inv_pi)) - 1;
    long long k1 = static_cast<long long>(std::ceil(x.hi * inv_pi)) + 1;
    if (k1 - k0 > 16) return true;  // wide interval, give up on tightness
    for (long long k = k0; k <= k1; ++k) {
        const bool even = (k % 2) == 0;
        if ((parity == 0) != even) continue;
        const double xk = static_cast<double>(k) * kPi;
        if (xk >= x.lo - slack && xk <= x.hi + slack) return true;
    }
    return false;
}

} // namespace

Ivl cos(const Ivl& x) {
    if (!(x.width() < 2 * kPi) || !std::isfinite(x.lo) || !std::isfinite(x.hi)) return {-1.0, 1.0};
    const double ca = std::cos(x.lo), cb = std::cos(x.hi);
    double lo = std::min(ca, cb) - kTrigPad;
    double hi = std::max(ca, cb) + kTrigPad;
    if (pi_multiple_inside(x, 0)) hi = 1.0;   // cos = +1 at even multiples of pi
    if (pi_multiple_inside(x, 1)) lo = -1.0;  // cos = -1 at odd multiples
    return {std::max(lo, -1.0), std::min(hi, 1.0)};
}

Ivl sin(const Ivl& x) {
    if (!(x.width() < 2 * kPi) || !std::isfinite(x.lo) || !std::isfinite(x.hi)) return {-1.0, 1.0};
    const double sa = std::sin(x.lo), sb = std::sin(x.hi);
    double lo = std::min(sa, sb) - kTrigPad;
    double hi = std::max(sa, sb) + kTrigPad;
    // sin = +1 at pi/2 + 2k pi, -1 at -pi/2 + 2k pi: shift by pi/2 and
    // reuse the pi-multiple test (sin x = cos(x - pi/2)).
    const Ivl shifted = sub(x, {next_down(0.5 * kPi), next_up(0.5 * kPi)});
    if (pi_multiple_inside(shifted, 0)) hi = 1.0;
    if (pi_multiple_inside(shifted, 1)) lo = -1.0;
    return {std::max(lo, -1.0), std::min(hi, 1.0)};
}

Ivl from_rational(const Rational& r) {
    const double d = r.to_double();
    // convert_to<double> is not documented as correctly rounded; one ulp
    // outward on each side is enough.
    return {next_down(d), next_up(d)};
}

} // namespace stellat::ivl
