#include "stellat/trig_poly.hpp"

#include "stellat/errors.hpp"

#include <algorithm>
#include <cmath>

namespace stellat {

namespace {

// Canonical summation order for merged coefficient contributions. The key
// is invariant under conjugation, so conjugate-symmetric inputs produce
// exactly conjugate-symmetric sums (the +-0 sign aside); that keeps
// self-adjointness and star-involution identities exact rather than
// approximate.
struct ConjStableLess {
    bool operator()(const CScalar& a, const CScalar& b) const {
        if (a.real() != b.real()) return a.real() < b.real();
        const double ia = std::fabs(a.imag()), ib = std::fabs(b.imag());
        if (ia != ib) return ia < ib;
        return a.imag() < b.imag();
    }
};

CScalar canonical_sum(std::vector<CScalar> v) {
    std::sort(v.begin(), v.end(), ConjStableLess{});
    CScalar acc{0.0, 0.0};
    for (const auto& z : v) acc += z;
    return acc;
}

bool negligible(const CScalar& z) { return std::abs(z) <= canon::drop_tol(); }

} // namespace

TrigPoly::TrigPoly(int dim) : dim_(dim) {
    if (dim < 1 || dim > 3) throw DimensionMismatch("TrigPoly: dimension must be 1..3");
}

TrigPoly TrigPoly::unit(int dim) {
    TrigPoly p(dim);
    p.terms_.emplace(FreqVec(dim, Freq(Rational(0))), CScalar(1.0, 0.0));
    return p;
}

TrigPoly TrigPoly::term(Rational freq, CScalar c) { return term(freq1(std::move(freq)), c); }

TrigPoly TrigPoly::term(FreqVec freq, CScalar c) {
    TrigPoly p(static_cast<int>(freq.size()));
    if (!negligible(c)) p.terms_.emplace(std::move(freq), c);
    return p;
}

TrigPoly TrigPoly::cosine(Rational freq, double amplitude) {
    TrigPoly p(1);
    const CScalar half(amplitude * 0.5, 0.0);
    if (freq.is_zero()) {
        p.terms_.emplace(freq1(Rational(0)), CScalar(amplitude, 0.0));
        return p;
    }
    p.terms_.emplace(freq1(freq), half);
    p.terms_.emplace(freq1(-freq), half);
    return p;
}

TrigPoly TrigPoly::sine(Rational freq, double amplitude) {
    TrigPoly p(1);
    if (freq.is_zero()) return p;
    p.terms_.emplace(freq1(freq), CScalar(0.0, -amplitude * 0.5));
    p.terms_.emplace(freq1(-freq), CScalar(0.0, amplitude * 0.5));
    return p;
}

CScalar TrigPoly::coeff(const FreqVec& f) const {
    auto it = terms_.find(f);
    return it == terms_.end() ? CScalar{0.0, 0.0} : it->second;
}

CScalar TrigPoly::coeff0() const { return coeff(FreqVec(dim_, Freq(Rational(0)))); }

TrigPoly TrigPoly::operator-() const {
    TrigPoly r(dim_);
    for (const auto& [f, c] : terms_) r.terms_.emplace(f, -c);
    return r;
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("TrigPoly: add with different dimensions");
    std::map<FreqVec, std::vector<CScalar>, FreqVecLess> acc;
    for (const auto& [f, c] : a.terms_) acc[f].push_back(c);
    for (const auto& [f, c] : b.terms_) acc[f].push_back(c);
    TrigPoly r(a.dim_);
    for (auto& [f, vs] : acc) {
        const CScalar s = canonical_sum(std::move(vs));
        if (!negligible(s)) r.terms_.emplace(f, s);
    }
    return r;
}

TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) { return a + (-b); }

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("TrigPoly: mul with different dimensions");
    std::map<FreqVec, std::vector<CScalar>, FreqVecLess> acc;
    for (const auto& [fa, ca] : a.terms_)
        for (const auto& [fb, cb] : b.terms_) acc[sum(fa, fb)].push_back(ca * cb);
    TrigPoly r(a.dim_);
    for (auto& [f, vs] : acc) {
        const CScalar s = canonical_sum(std::move(vs));
        if (!negligible(s)) r.terms_.emplace(f, s);
    }
    return r;
}

TrigPoly TrigPoly::scaled(CScalar s) const {
    TrigPoly r(dim_);
    for (const auto& [f, c] : terms_) {
        const CScalar v = c * s;
        if (!negligible(v)) r.terms_.emplace(f, v);
    }
    return r;
}

TrigPoly TrigPoly::star() const {
    TrigPoly r(dim_);
    for (const auto& [f, c] : terms_) r.terms_.emplace(negated(f), std::conj(c));
    return r;
}

TrigPoly TrigPoly::derivative(int direction) const {
    if (direction < 0 || direction >= dim_)
        throw DimensionMismatch("TrigPoly: derivative direction out of range");
    TrigPoly r(dim_);
    for (const auto& [f, c] : terms_) {
        const double lam = f[direction].approx();
        const CScalar v = CScalar(0.0, lam) * c;  // d/dx e^{i lam x} = i lam e^{i lam x}
        if (!negligible(v)) r.terms_.emplace(f, v);
    }
    return r;
}

CScalar TrigPoly::eval(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch("TrigPoly: eval point dimension");
    CScalar acc{0.0, 0.0};
    for (const auto& [f, c] : terms_) {
        double phase = 0.0;
        for (int k = 0; k < dim_; ++k) phase += f[k].approx() * x[k];
        acc += c * CScalar(std::cos(phase), std::sin(phase));
    }
    return acc;
}

bool TrigPoly::is_self_adjoint() const {
    for (const auto& [f, c] : terms_) {
        const CScalar mirror = coeff(negated(f));
        if (!(mirror.real() == c.real() && mirror.imag() == -c.imag())) return false;
    }
    return true;
}

bool TrigPoly::all_freqs_exact() const {
    for (const auto& [f, c] : terms_) {
        (void)c;
        if (!all_exact(f)) return false;
    }
    return true;
}

double TrigPoly::sum_abs_coeffs() const {
    double s = 0.0;
    for (const auto& [f, c] : terms_) {
        (void)f;
        s += std::abs(c);
    }
    return s;
}

void TrigPoly::check_invariants() const {
    for (const auto& [f, c] : terms_) {
        if (static_cast<int>(f.size()) != dim_)
            throw InvariantViolation("TrigPoly: frequency dimension mismatch");
        if (negligible(c)) throw InvariantViolation("TrigPoly: stored zero coefficient");
        if (!is_finite(c)) throw InvariantViolation("TrigPoly: non-finite coefficient");
    }
}

} // namespace stellat
