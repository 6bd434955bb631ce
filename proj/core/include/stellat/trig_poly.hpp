#pragma once

#include "stellat/config.hpp"
#include "stellat/freq.hpp"
#include "stellat/scalar.hpp"

#include <map>
#include <vector>

namespace stellat {

/// Finite trigonometric polynomial  sum_k c_k e^{i lambda_k . x}  on R^d.
///
/// Frequencies are exact (or flagged irrational); no zero coefficients are
/// stored; terms are kept sorted by frequency. With exact rational
/// frequencies this is the periodic subclass of the almost periodic
/// functions, which is what makes period detection and certified norms
/// possible.
class TrigPoly {
public:
    explicit TrigPoly(int dim = 1);

    static TrigPoly zero(int dim = 1) { return TrigPoly(dim); }
    static TrigPoly unit(int dim = 1);
    /// Single term c*e^{i lambda x} in one dimension.
    static TrigPoly term(Rational freq, CScalar c);
    static TrigPoly term(FreqVec freq, CScalar c);
    /// cos(lambda x) = {lambda -> 1/2, -lambda -> 1/2}.
    static TrigPoly cosine(Rational freq, double amplitude = 1.0);
    static TrigPoly sine(Rational freq, double amplitude = 1.0);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<FreqVec, CScalar, FreqVecLess>& terms() const { return terms_; }

    /// Coefficient at a frequency (zero if absent).
    CScalar coeff(const FreqVec& f) const;
    CScalar coeff0() const;  // constant-term coefficient

    TrigPoly operator-() const;
    friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
    friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
    TrigPoly scaled(CScalar s) const;

    TrigPoly star() const;
    TrigPoly derivative(int direction = 0) const;
    CScalar eval(const std::vector<double>& x) const;
    CScalar eval(double x) const { return eval(std::vector<double>{x}); }

    /// c(-lambda) == conj(c(lambda)) for every term (numeric equality).
    bool is_self_adjoint() const;
    bool all_freqs_exact() const;
    double sum_abs_coeffs() const;

    /// Structural invariants: distinct frequencies of the right dimension,
    /// no stored zero coefficients, finite coefficients.
    void check_invariants() const;

    friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    void insert_canonical(const FreqVec& f, const std::vector<CScalar>& contributions);

    int dim_;
    std::map<FreqVec, CScalar, FreqVecLess> terms_;
};

} // namespace stellat
