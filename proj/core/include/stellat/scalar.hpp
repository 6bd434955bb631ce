#pragma once

#include <cmath>
#include <complex>

namespace stellat {

/// Complex scalar. Coefficients are double precision; exactness lives in
/// the frequency bookkeeping, magnitudes only feed inequalities.
using CScalar = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const CScalar& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline double abs2(const CScalar& z) { return z.real() * z.real() + z.imag() * z.imag(); }

} // namespace stellat
