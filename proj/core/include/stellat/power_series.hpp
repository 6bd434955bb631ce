#pragma once

#include "stellat/scalar.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <string>

namespace stellat {

/// Geometric coefficient majorant: |c_j| <= A * q^j for all j >= the index
/// the majorant was requested at.
struct Majorant {
    double A = 0.0;
    double q = 0.0;
};

/// Power series  f(z) = sum_k c_k z^k  with certified tail data.
///
/// coeff(k) is the working coefficient; abs_coeff(k) an upward-rounded
/// bound on |c_k|; majorant(k), when available, certifies geometric decay
/// from index k on and is what turns truncation into a proven tail bound.
/// Preset constructors (identity, exp, sqrt of a shifted argument) carry
/// closed forms for recentering; everything else recenters through a
/// certified binomial resummation.
class PowerSeries {
public:
    using CoeffFn = std::function<CScalar(int)>;
    using AbsFn = std::function<double(int)>;
    using MajorantFn = std::function<Majorant(int)>;

    static PowerSeries identity();
    static PowerSeries exponential();
    /// sqrt(r + sign*z), radius r; the square root branch is holomorphic off
    /// the negative real axis and positive on the positive one.
    static PowerSeries sqrt_shift(double r, int sign);
    /// Generic constructor.
    PowerSeries(std::string name, double radius, CoeffFn coeff, AbsFn abs_coeff,
                MajorantFn majorant = nullptr, int finite_degree = -1);

    /// Parses "identity", "exp", "sqrt_shift(r,+)" or "sqrt_shift(r,-)".
    static PowerSeries from_name(const std::string& spec);

    const std::string& name() const { return name_; }
    double radius() const { return radius_; }
    CScalar coeff(int k) const { return coeff_(k); }
    double abs_coeff(int k) const { return abs_coeff_(k); }
    bool has_majorant() const { return static_cast<bool>(majorant_); }
    Majorant tail_majorant(int k) const { return majorant_(k); }
    int finite_degree() const { return finite_degree_; }

    /// Certified bound on sum_{k>n} |c_k| rho^k; +inf when no bound is
    /// available at this rho (caller increases n or reports failure).
    double tail_bound(int n, double rho) const;

    /// Same series with the constant term removed: g(z) = f(z) - f(0).
    PowerSeries minus_constant_term() const;

    /// Termwise derivative; same radius.
    PowerSeries derivative() const;

    /// f_mu(w) = f(mu + w); preset closed forms where possible, otherwise a
    /// certified binomial resummation with radius shrunk by |mu|.
    PowerSeries recentered(CScalar mu) const;

    /// f(mu) for |mu| < radius.
    CScalar value_at(CScalar mu) const;

private:
    enum class Kind { generic, identity, exponential, sqrt_shift };

    std::string name_;
    double radius_ = 0.0;
    CoeffFn coeff_;
    AbsFn abs_coeff_;
    MajorantFn majorant_;
    int finite_degree_ = -1;
    Kind kind_ = Kind::generic;
    double sqrt_r_ = 0.0;
    int sqrt_sign_ = 1;
};

} // namespace stellat
