#pragma once

#include "stellat/polynomial.hpp"

#include <utility>
#include <vector>

namespace stellat {

/// Strictly proper rational function with a real-root-free denominator,
/// i.e. a smooth function decaying to 0 at +-infinity.
///
/// The denominator is kept in factored form: a product of monic pole-free
/// factors with multiplicities. Each monic factor without real roots has
/// even degree and is positive on all of R, so the denominator never
/// vanishes and stays positive. Arithmetic only multiplies, merges or
/// squares existing factors, which keeps the pole-freeness certificates
/// (exact real-root counts) small no matter how often results are combined.
///
/// Numerator coefficients are complex: products with trigonometric
/// coefficients and the star involution land outside the real-coefficient
/// class, while denominators stay real throughout.
class RationalFn {
public:
    using Factor = std::pair<RPoly, int>; // (monic factor, multiplicity)

    RationalFn() = default; // zero function

    /// From numerator and expanded denominator; verifies pole-freeness by
    /// exact real-root counting and strict properness, scales monic.
    RationalFn(CPoly num, RPoly den);

    /// Trusted constructor for results of closed operations; checks degrees
    /// but skips the (already inherited) root-freeness certificate.
    static RationalFn from_parts(CPoly num, std::vector<Factor> factors);

    static RationalFn zero() { return RationalFn(); }

    bool is_zero() const { return num_.is_zero(); }
    const CPoly& num() const { return num_; }
    const std::vector<Factor>& den_factors() const { return factors_; }
    int num_degree() const { return num_.degree(); }
    int den_degree() const;
    RPoly den_expanded() const;

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    RationalFn scaled(CScalar s) const;
    RationalFn conj() const; // complex conjugate of the function (x real)
    RationalFn derivative() const;

    CScalar eval(double x) const;
    /// Interval enclosure of {re, im} over x in [X].
    std::pair<Ivl, Ivl> eval_ivl(const Ivl& x) const;

    /// Decay envelope: |r(x)| <= C/|x| for all |x| >= R0 (upward rounded).
    /// Returns {R0, C}; {0, 0} for the zero function.
    std::pair<double, double> decay_envelope() const;

    double max_abs_num_coeff() const { return max_abs_coeff(num_); }

    /// Full invariant check including the exact real-root count per factor.
    void check_invariants() const;

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.factors_ == b.factors_;
    }

private:
    void normalize();

    CPoly num_;
    std::vector<Factor> factors_; // sorted; empty product = 1 (zero fn only)
};

} // namespace stellat
