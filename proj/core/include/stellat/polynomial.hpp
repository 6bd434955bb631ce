#pragma once

#include "stellat/interval.hpp"
#include "stellat/rational.hpp"
#include "stellat/scalar.hpp"

#include <vector>

namespace stellat {

/// Dense univariate polynomial, coefficients low degree first.
/// The zero polynomial is the empty coefficient vector (degree -1).
template <typename T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(T v) { return Poly(std::vector<T>{v}); }

    const std::vector<T>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T{}; }
    T leading() const { return c_.empty() ? T{} : c_.back(); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b) { return add(a, b, T{1}); }
    friend Poly operator-(const Poly& a, const Poly& b) { return add(a, b, T{-1}); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T{});
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    Poly scaled(T s) const;
    Poly derivative() const;

    T eval(double x) const {
        T acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    static Poly add(const Poly& a, const Poly& b, T sb) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T{});
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += sb * b.c_[i];
        return Poly(std::move(r));
    }
    void trim();

    std::vector<T> c_;
};

using RPoly = Poly<double>;
using CPoly = Poly<CScalar>;

/// Real and imaginary coefficient parts of a complex polynomial.
RPoly real_part(const CPoly& p);
RPoly imag_part(const CPoly& p);
CPoly to_complex(const RPoly& p);
CPoly conj_coeffs(const CPoly& p);

/// Interval Horner evaluation; sound for every x in the interval.
Ivl eval_ivl(const RPoly& p, const Ivl& x);

double max_abs_coeff(const RPoly& p);
double max_abs_coeff(const CPoly& p);

/// Number of distinct real roots, computed exactly: the double
/// coefficients convert to dyadic rationals without loss and a Sturm chain
/// runs over exact rational arithmetic.
int count_real_roots(const RPoly& p);

} // namespace stellat
