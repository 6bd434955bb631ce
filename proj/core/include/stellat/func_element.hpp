#pragma once

#include "stellat/mod_rat_sum.hpp"
#include "stellat/trig_poly.hpp"

#include <vector>

namespace stellat {

/// Element of the direct sum  C_0(R) (+) C_AP(R)  (or of C_AP(R^d) for
/// d in {2,3}, where the decaying part must be empty).
///
/// The grading is preserved by all operations: the product of two decaying
/// parts, and of a decaying part with an almost periodic part, decays
/// again; only ap x ap contributes to the almost periodic part.
class FuncElement {
public:
    explicit FuncElement(int dim = 1);
    FuncElement(ModRatSum c0, TrigPoly ap);

    static FuncElement zero(int dim = 1) { return FuncElement(dim); }
    static FuncElement unit(int dim = 1) { return FuncElement(ModRatSum::zero(), TrigPoly::unit(dim)); }
    static FuncElement from_trig(TrigPoly ap) { return FuncElement(ModRatSum::zero(), std::move(ap)); }
    static FuncElement from_c0(ModRatSum c0) { return FuncElement(std::move(c0), TrigPoly::zero(1)); }

    int dim() const { return dim_; }
    bool is_zero() const { return c0_.is_zero() && ap_.is_zero(); }
    const ModRatSum& c0() const { return c0_; }
    const TrigPoly& ap() const { return ap_; }
    bool c0_empty() const { return c0_.is_zero(); }
    bool ap_empty() const { return ap_.is_zero(); }

    friend FuncElement operator+(const FuncElement& a, const FuncElement& b);
    friend FuncElement operator-(const FuncElement& a, const FuncElement& b);
    friend FuncElement operator*(const FuncElement& a, const FuncElement& b);
    FuncElement operator-() const;
    FuncElement scaled(CScalar s) const;

    FuncElement star() const;
    FuncElement derivative(int direction = 0) const;
    CScalar eval(const std::vector<double>& x) const;
    CScalar eval(double x) const;

    bool is_self_adjoint() const { return ap_.is_self_adjoint() && c0_.is_self_adjoint(); }
    bool all_freqs_exact() const { return ap_.all_freqs_exact() && c0_.all_freqs_exact(); }

    /// Largest coefficient magnitude across both parts; the residual metric
    /// used by exact-identity checks.
    double max_coeff_magnitude() const;

    /// Full structural checker: grading, per-part invariants, pole-freeness
    /// and properness certificates.
    void check_invariants() const;

    friend bool operator==(const FuncElement& a, const FuncElement& b) {
        return a.dim_ == b.dim_ && a.c0_ == b.c0_ && a.ap_ == b.ap_;
    }

private:
    int dim_;
    ModRatSum c0_;
    TrigPoly ap_;
};

} // namespace stellat
