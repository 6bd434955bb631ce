#pragma once

#include "stellat/freq.hpp"
#include "stellat/rational_fn.hpp"
#include "stellat/trig_poly.hpp"

#include <map>
#include <vector>

namespace stellat {

/// Finite sum of modulated rationals  sum_j r_j(x) e^{i lambda_j x}  on R.
/// Each r_j decays at infinity, so the sum is a smooth function vanishing
/// at +-infinity whose derivatives all vanish there too. The class is
/// closed under +, *, star, d/dx and under multiplication by
/// trigonometric polynomials, which is what the direct sum C_0 + C_AP
/// needs (mixed products fall back into the decaying part).
class ModRatSum {
public:
    ModRatSum() = default;

    static ModRatSum zero() { return {}; }
    static ModRatSum term(RationalFn r, Freq freq);
    static ModRatSum term(RationalFn r, Rational freq) { return term(std::move(r), Freq(std::move(freq))); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Freq, RationalFn>& terms() const { return terms_; }

    ModRatSum operator-() const;
    friend ModRatSum operator+(const ModRatSum& a, const ModRatSum& b);
    friend ModRatSum operator-(const ModRatSum& a, const ModRatSum& b) { return a + (-b); }
    friend ModRatSum operator*(const ModRatSum& a, const ModRatSum& b);
    ModRatSum scaled(CScalar s) const;

    /// Product with a 1-d trigonometric polynomial: stays in the class.
    ModRatSum mul_trig(const TrigPoly& t) const;

    ModRatSum star() const;
    ModRatSum derivative() const;
    CScalar eval(double x) const;

    bool all_freqs_exact() const;
    /// r(-lambda) == conj(r(lambda)) termwise.
    bool is_self_adjoint() const;

    /// Joint decay envelope {R0, C}: |value(x)| <= C/|x| for |x| >= R0.
    std::pair<double, double> decay_envelope() const;

    void check_invariants() const;

    friend bool operator==(const ModRatSum& a, const ModRatSum& b) { return a.terms_ == b.terms_; }

private:
    static ModRatSum from_contributions(std::map<Freq, std::vector<RationalFn>>&& acc);

    std::map<Freq, RationalFn> terms_;
};

} // namespace stellat
