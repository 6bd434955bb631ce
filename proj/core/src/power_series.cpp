#include "stellat/power_series.hpp"

#include "stellat/errors.hpp"
#include "stellat/interval.hpp"

#include <cmath>
#include <vector>

namespace stellat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// |binom(1/2, k)|, upward rounded when up = true. The values decrease from
// k = 1 on, which the sqrt majorant relies on.
double abs_half_binom(int k, bool up) {
    double b = 1.0;
    for (int j = 0; j < k; ++j) {
        const double f = std::fabs(0.5 - j) / (j + 1);
        b *= f;
        if (up) b = ivl::next_up(b);
    }
    return b;
}

CScalar half_binom(int k) {
    double b = 1.0;
    for (int j = 0; j < k; ++j) b *= (0.5 - j) / (j + 1);
    return {b, 0.0};
}

double up_div(double a, double b) { return ivl::next_up(a / b); }
double up_mul(double a, double b) { return ivl::next_up(a * b); }

double geometric_tail(const Majorant& m, int n, double rho) {
    const double qr = up_mul(m.q, rho);
    if (!(qr < 1.0)) return kInf;
    // A * (q rho)^{n+1} / (1 - q rho)
    double p = 1.0;
    for (int k = 0; k <= n; ++k) p = up_mul(p, qr);
    return up_div(up_mul(m.A, p), 1.0 - qr);
}

} // namespace

PowerSeries::PowerSeries(std::string name, double radius, CoeffFn coeff, AbsFn abs_coeff,
                         MajorantFn majorant, int finite_degree)
    : name_(std::move(name)),
      radius_(radius),
      coeff_(std::move(coeff)),
      abs_coeff_(std::move(abs_coeff)),
      majorant_(std::move(majorant)),
      finite_degree_(finite_degree) {}

PowerSeries PowerSeries::identity() {
    PowerSeries s(
        "identity", kInf, [](int k) { return CScalar(k == 1 ? 1.0 : 0.0, 0.0); },
        [](int k) { return k == 1 ? 1.0 : 0.0; }, nullptr, 1);
    s.kind_ = Kind::identity;
    return s;
}

PowerSeries PowerSeries::exponential() {
    auto abs = [](int k) {
        double v = 1.0;
        for (int j = 1; j <= k; ++j) v = up_div(v, static_cast<double>(j));
        return v;
    };
    PowerSeries s(
        "exp", kInf, [abs](int k) { return CScalar(1.0 / std::tgamma(k + 1.0), 0.0); }, abs,
        [abs](int k) {
            // 1/j! <= (1/k!) * (k+1)^{k-j} for j >= k
            double A = abs(k);
            for (int j = 0; j < k; ++j) A = up_mul(A, static_cast<double>(k + 1));
            return Majorant{A, up_div(1.0, static_cast<double>(k + 1))};
        });
    s.kind_ = Kind::exponential;
    return s;
}

PowerSeries PowerSeries::sqrt_shift(double r, int sign) {
    if (!(r > 0.0)) throw ConfigError("sqrt_shift: r must be positive");
    if (sign != 1 && sign != -1) throw ConfigError("sqrt_shift: sign must be +-1");
    const double sr = std::sqrt(r);
    auto coeff = [r, sign, sr](int k) {
        // sqrt(r) * binom(1/2,k) * (sign/r)^k
        CScalar c = half_binom(k);
        double scale = sr;
        for (int j = 0; j < k; ++j) scale /= (sign > 0 ? r : -r);
        return c * scale;
    };
    auto abs = [r, sr](int k) {
        double v = up_mul(ivl::next_up(sr), abs_half_binom(k, true));
        for (int j = 0; j < k; ++j) v = up_div(v, r);
        return v;
    };
    auto maj = [r, sr](int k) {
        // |c_j| = sqrt(r)|binom(1/2,j)| r^{-j} <= sqrt(r)|binom(1/2,k)| r^{-j}
        return Majorant{up_mul(ivl::next_up(sr), abs_half_binom(k, true)), up_div(1.0, r)};
    };
    PowerSeries s("sqrt_shift", r, coeff, abs, maj);
    s.kind_ = Kind::sqrt_shift;
    s.sqrt_r_ = r;
    s.sqrt_sign_ = sign;
    return s;
}

PowerSeries PowerSeries::from_name(const std::string& spec) {
    if (spec == "identity") return identity();
    if (spec == "exp") return exponential();
    if (spec.rfind("sqrt_shift(", 0) == 0 && spec.back() == ')') {
        const std::string inner = spec.substr(11, spec.size() - 12);
        const auto comma = inner.find(',');
        if (comma != std::string::npos) {
            const double r = std::stod(inner.substr(0, comma));
            const std::string sgn = inner.substr(comma + 1);
            if (sgn == "+" || sgn == "+1") return sqrt_shift(r, 1);
            if (sgn == "-" || sgn == "-1") return sqrt_shift(r, -1);
        }
    }
    throw ConfigError("unknown series preset '" + spec + "'");
}

double PowerSeries::tail_bound(int n, double rho) const {
    if (finite_degree_ >= 0 && n >= finite_degree_) return 0.0;
    if (!majorant_) return kInf;
    return geometric_tail(majorant_(n + 1), n, rho);
}

PowerSeries PowerSeries::minus_constant_term() const {
    PowerSeries s(*this);
    s.name_ = name_ + "-c0";
    const CoeffFn base_coeff = coeff_;
    const AbsFn base_abs = abs_coeff_;
    s.coeff_ = [base_coeff](int k) { return k == 0 ? CScalar(0.0, 0.0) : base_coeff(k); };
    s.abs_coeff_ = [base_abs](int k) { return k == 0 ? 0.0 : base_abs(k); };
    s.kind_ = Kind::generic;
    return s;
}

PowerSeries PowerSeries::derivative() const {
    const CoeffFn base_coeff = coeff_;
    const AbsFn base_abs = abs_coeff_;
    const MajorantFn base_maj = majorant_;
    MajorantFn maj = nullptr;
    if (base_maj) {
        maj = [base_maj](int k) {
            // (j+1) q^{j+1} <= (k+1) beta^{j-k} q^{j+1},  beta = (k+2)/(k+1)
            const Majorant m = base_maj(k + 1);
            const double beta = up_div(static_cast<double>(k + 2), static_cast<double>(k + 1));
            double A = up_mul(up_mul(m.A, m.q), static_cast<double>(k + 1));
            for (int j = 0; j < k; ++j) A = up_div(A, beta);
            return Majorant{A, up_mul(m.q, beta)};
        };
    }
    return PowerSeries(
        name_ + "'", radius_, [base_coeff](int k) { return base_coeff(k + 1) * static_cast<double>(k + 1); },
        [base_abs](int k) { return up_mul(base_abs(k + 1), static_cast<double>(k + 1)); }, maj,
        finite_degree_ >= 1 ? finite_degree_ - 1 : finite_degree_);
}

PowerSeries PowerSeries::recentered(CScalar mu) const {
    const double amu = std::abs(mu);
    if (amu == 0.0) return *this;
    switch (kind_) {
        case Kind::identity: {
            const CScalar c0 = mu;
            return PowerSeries(
                "identity@mu", kInf,
                [c0](int k) { return k == 0 ? c0 : CScalar(k == 1 ? 1.0 : 0.0, 0.0); },
                [c0](int k) { return k == 0 ? std::abs(c0) : (k == 1 ? 1.0 : 0.0); }, nullptr, 1);
        }
        case Kind::exponential: {
            const CScalar scale = std::exp(mu);
            const double ascale = ivl::next_up(std::abs(scale));
            const PowerSeries base = exponential();
            return PowerSeries(
                "exp@mu", kInf, [scale, base](int k) { return base.coeff(k) * scale; },
                [ascale, base](int k) { return up_mul(base.abs_coeff(k), ascale); },
                [ascale, base](int k) {
                    Majorant m = base.tail_majorant(k);
                    m.A = up_mul(m.A, ascale);
                    return m;
                });
        }
        case Kind::sqrt_shift:
            if (mu.imag() == 0.0) {
                const double shifted = sqrt_r_ + sqrt_sign_ * mu.real();
                if (shifted > 0.0) return sqrt_shift(shifted, sqrt_sign_);
            }
            break;
        case Kind::generic:
            break;
    }
    // Certified binomial resummation: c'_j = sum_k c_k binom(k,j) mu^{k-j}.
    if (!majorant_) throw SeriesRadiusExceeded("recentered: series carries no tail majorant");
    if (!(amu < radius_)) throw SeriesRadiusExceeded("recentered: |mu| >= radius");
    const CoeffFn base_coeff = coeff_;
    const AbsFn base_abs = abs_coeff_;
    const MajorantFn base_maj = majorant_;

    auto shifted_coeff = [base_coeff, base_maj, mu, amu](int j) {
        CScalar acc{0.0, 0.0};
        double binom = 1.0; // binom(k, j) maintained incrementally
        CScalar mu_pow{1.0, 0.0};
        int k = j;
        for (;; ++k) {
            acc += base_coeff(k) * binom * mu_pow;
            // stop once the certified remainder is negligible
            if (k >= 2 * j + 8) {
                const Majorant m = base_maj(k + 1);
                const double grow = static_cast<double>(k + 2) / static_cast<double>(k + 1 - j);
                const double qq = m.q * amu * grow;
                if (qq < 0.9) {
                    double tk = m.A * binom * grow;
                    for (int i = 0; i <= k; ++i) tk *= m.q;
                    for (int i = 0; i < k - j; ++i) tk *= amu;
                    if (tk / (1.0 - qq) <= 1e-18 * (1.0 + std::abs(acc))) break;
                }
            }
            if (k > j + 4096) break; // defensive cap; tail already tiny
            binom = binom * (k + 1) / (k + 1 - j);
            mu_pow *= mu;
        }
        return acc;
    };
    auto shifted_abs = [shifted_coeff](int j) {
        return ivl::next_up(ivl::next_up(std::abs(shifted_coeff(j))) * (1.0 + 1e-12));
    };
    auto shifted_maj = [base_maj, amu](int k) {
        // |c'_j| <= A q^j / (1 - q|mu|)^{j+1} with (A, q) from the source
        const Majorant m = base_maj(0);
        const double denom = 1.0 - up_mul(m.q, amu);
        if (!(denom > 0.0)) return Majorant{kInf, 1.0};
        (void)k;
        return Majorant{up_div(m.A, denom), up_div(m.q, denom)};
    };
    return PowerSeries(name_ + "@mu", ivl::next_down(radius_ - amu), shifted_coeff, shifted_abs,
                       shifted_maj);
}

CScalar PowerSeries::value_at(CScalar mu) const {
    switch (kind_) {
        case Kind::identity:
            return mu;
        case Kind::exponential:
            return std::exp(mu);
        case Kind::sqrt_shift:
            if (mu.imag() == 0.0 && sqrt_r_ + sqrt_sign_ * mu.real() >= 0.0)
                return {std::sqrt(sqrt_r_ + sqrt_sign_ * mu.real()), 0.0};
            return std::sqrt(CScalar(sqrt_r_, 0.0) + static_cast<double>(sqrt_sign_) * mu);
        case Kind::generic:
            break;
    }
    const double amu = std::abs(mu);
    if (!(amu < radius_)) throw SeriesRadiusExceeded("value_at: |mu| >= radius");
    CScalar acc{0.0, 0.0};
    CScalar p{1.0, 0.0};
    for (int k = 0; k <= 8192; ++k) {
        acc += coeff_(k) * p;
        if (finite_degree_ >= 0 && k >= finite_degree_) break;
        if (k > 4 && tail_bound(k, amu) <= 1e-18 * (1.0 + std::abs(acc))) break;
        p *= mu;
    }
    return acc;
}

} // namespace stellat
