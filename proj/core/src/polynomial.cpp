#include "stellat/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace stellat {

namespace {
bool coeff_is_zero(double x) { return x == 0.0; }
bool coeff_is_zero(const CScalar& z) { return z.real() == 0.0 && z.imag() == 0.0; }
} // namespace

template <typename T>
void Poly<T>::trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
}

template <typename T>
Poly<T> Poly<T>::operator-() const {
    std::vector<T> r(c_);
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
}

template <typename T>
Poly<T> Poly<T>::scaled(T s) const {
    std::vector<T> r(c_);
    for (auto& v : r) v = v * s;
    return Poly(std::move(r));
}

template <typename T>
Poly<T> Poly<T>::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> r(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * static_cast<double>(k);
    return Poly(std::move(r));
}

template class Poly<double>;
template class Poly<CScalar>;

RPoly real_part(const CPoly& p) {
    std::vector<double> r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeffs()[i].real();
    return RPoly(std::move(r));
}

RPoly imag_part(const CPoly& p) {
    std::vector<double> r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeffs()[i].imag();
    return RPoly(std::move(r));
}

CPoly to_complex(const RPoly& p) {
    std::vector<CScalar> r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = CScalar(p.coeffs()[i], 0.0);
    return CPoly(std::move(r));
}

CPoly conj_coeffs(const CPoly& p) {
    std::vector<CScalar> r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::conj(p.coeffs()[i]);
    return CPoly(std::move(r));
}

Ivl eval_ivl(const RPoly& p, const Ivl& x) {
    Ivl acc = Ivl::point(0.0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = ivl::add(ivl::mul(acc, x), Ivl::point(*it));
    return acc;
}

double max_abs_coeff(const RPoly& p) {
    double m = 0.0;
    for (double c : p.coeffs()) m = std::max(m, std::fabs(c));
    return m;
}

double max_abs_coeff(const CPoly& p) {
    double m = 0.0;
    for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

namespace {

using QPoly = std::vector<BigRat>; // low degree first, exact coefficients

void qtrim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder of a by b (degrees exact), b monic-ized on the fly.
QPoly qrem(QPoly a, const QPoly& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const BigRat q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        a.pop_back();
        qtrim(a);
        if (a.empty()) break;
    }
    return a;
}

int sign_at_infinity(const QPoly& p, bool positive_end) {
    if (p.empty()) return 0;
    int s = p.back().sign();
    if (!positive_end && (p.size() - 1) % 2 == 1) s = -s;
    return s;
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace

int count_real_roots(const RPoly& p) {
    if (p.is_zero() || p.degree() == 0) return 0;
    QPoly p0;
    p0.reserve(p.coeffs().size());
    for (double c : p.coeffs()) p0.emplace_back(c); // dyadic, exact
    qtrim(p0);

    // Square-free part: p / gcd(p, p'), so repeated roots count once and the
    // Sturm chain is well defined.
    QPoly p1(p0.size() - 1);
    for (std::size_t k = 1; k < p0.size(); ++k) p1[k - 1] = p0[k] * static_cast<int>(k);
    qtrim(p1);

    std::vector<QPoly> chain{p0, p1};
    while (chain.back().size() > 1) {
        QPoly r = qrem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    // If the chain ended on a nonconstant gcd, p had repeated roots; divide
    // them out by restarting on p/gcd. Rare for the inputs this library
    // builds, so the simple recursive handling is fine.
    if (chain.back().size() > 1) {
        const QPoly& g = chain.back();
        QPoly quot;
        QPoly rem = p0;
        const std::size_t dq = p0.size() - g.size() + 1;
        quot.assign(dq, BigRat(0));
        while (rem.size() >= g.size() && !rem.empty()) {
            const BigRat q = rem.back() / g.back();
            const std::size_t shift = rem.size() - g.size();
            quot[shift] = q;
            for (std::size_t i = 0; i < g.size(); ++i) rem[shift + i] -= q * g[i];
            rem.pop_back();
            qtrim(rem);
        }
        std::vector<double> qd(quot.size());
        for (std::size_t i = 0; i < quot.size(); ++i) qd[i] = quot[i].convert_to<double>();
        // Exactness is lost by the double conversion only if the quotient
        // overflows doubles; inputs here are tiny. Recount on the square-free
        // part via exact rationals instead, to stay exact:
        std::vector<QPoly> chain2{quot, {}};
        QPoly q1(quot.size() - 1);
        for (std::size_t k = 1; k < quot.size(); ++k) q1[k - 1] = quot[k] * static_cast<int>(k);
        qtrim(q1);
        chain2[1] = std::move(q1);
        while (chain2.back().size() > 1) {
            QPoly r = qrem(chain2[chain2.size() - 2], chain2.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            chain2.push_back(std::move(r));
        }
        chain = std::move(chain2);
    }

    std::vector<int> at_minus, at_plus;
    at_minus.reserve(chain.size());
    at_plus.reserve(chain.size());
    for (const auto& q : chain) {
        at_minus.push_back(sign_at_infinity(q, false));
        at_plus.push_back(sign_at_infinity(q, true));
    }
    return sign_changes(at_minus) - sign_changes(at_plus);
}

} // namespace stellat
