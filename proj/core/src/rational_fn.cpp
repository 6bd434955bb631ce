#include "stellat/rational_fn.hpp"

#include "stellat/config.hpp"
#include "stellat/errors.hpp"

#include <algorithm>
#include <cmath>

namespace stellat {

namespace {

bool factor_less(const RationalFn::Factor& a, const RationalFn::Factor& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.coeffs() < b.first.coeffs();
}

RPoly expand(const std::vector<RationalFn::Factor>& fs) {
    RPoly d = RPoly::constant(1.0);
    for (const auto& [f, m] : fs)
        for (int k = 0; k < m; ++k) d = d * f;
    return d;
}

Ivl ipow(const Ivl& x, int n) {
    Ivl r = Ivl::point(1.0);
    for (int k = 0; k < n; ++k) r = ivl::mul(r, x);
    return r;
}

} // namespace

RationalFn::RationalFn(CPoly num, RPoly den) {
    if (den.is_zero()) throw InvariantViolation("RationalFn: zero denominator");
    if (num.is_zero()) return;
    if (den.degree() < num.degree() + 1)
        throw InvariantViolation("RationalFn: not strictly proper");
    if (den.degree() % 2 != 0)
        throw InvariantViolation("RationalFn: odd-degree denominator has a real root");
    if (count_real_roots(den) != 0)
        throw InvariantViolation("RationalFn: denominator has a real root");
    const double lead = den.leading();
    num_ = num.scaled(CScalar(1.0 / lead, 0.0));
    factors_.emplace_back(den.scaled(1.0 / lead), 1);
    normalize();
}

RationalFn RationalFn::from_parts(CPoly num, std::vector<Factor> factors) {
    RationalFn r;
    r.num_ = std::move(num);
    r.factors_ = std::move(factors);
    r.normalize();
    if (!r.is_zero() && r.num_.degree() + 1 > r.den_degree())
        throw InvariantViolation("RationalFn: operation left the proper class");
    return r;
}

void RationalFn::normalize() {
    if (num_.is_zero() || max_abs_coeff(num_) <= canon::drop_tol()) {
        num_ = CPoly{};
        factors_.clear();
        return;
    }
    std::sort(factors_.begin(), factors_.end(), factor_less);
    std::vector<Factor> merged;
    for (auto& f : factors_) {
        if (f.first.degree() == 0) continue; // monic constant = 1
        if (!merged.empty() && merged.back().first == f.first)
            merged.back().second += f.second;
        else
            merged.push_back(std::move(f));
    }
    factors_ = std::move(merged);
}

int RationalFn::den_degree() const {
    int d = 0;
    for (const auto& [f, m] : factors_) d += f.degree() * m;
    return d;
}

RPoly RationalFn::den_expanded() const { return expand(factors_); }

RationalFn RationalFn::operator-() const {
    RationalFn r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Common denominator: per-factor maximum multiplicity.
    std::vector<RationalFn::Factor> common = a.factors_;
    for (const auto& fb : b.factors_) {
        auto it = std::find_if(common.begin(), common.end(),
                               [&](const auto& f) { return f.first == fb.first; });
        if (it == common.end())
            common.push_back(fb);
        else
            it->second = std::max(it->second, fb.second);
    }
    auto cofactor = [&](const std::vector<RationalFn::Factor>& own) {
        RPoly co = RPoly::constant(1.0);
        for (const auto& [f, m] : common) {
            int have = 0;
            for (const auto& [g, n] : own)
                if (g == f) have = n;
            for (int k = have; k < m; ++k) co = co * f;
        }
        return co;
    };
    CPoly num = a.num_ * to_complex(cofactor(a.factors_)) + b.num_ * to_complex(cofactor(b.factors_));
    return RationalFn::from_parts(std::move(num), std::move(common));
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return RationalFn::zero();
    std::vector<RationalFn::Factor> factors = a.factors_;
    factors.insert(factors.end(), b.factors_.begin(), b.factors_.end());
    return RationalFn::from_parts(a.num_ * b.num_, std::move(factors));
}

RationalFn RationalFn::scaled(CScalar s) const {
    if (is_zero()) return *this;
    return from_parts(num_.scaled(s), factors_);
}

RationalFn RationalFn::conj() const {
    if (is_zero()) return *this;
    RationalFn r(*this);
    r.num_ = conj_coeffs(num_);
    return r;
}

RationalFn RationalFn::derivative() const {
    if (is_zero()) return *this;
    // (n / prod f^m)' = [n' prod f - n sum_i m_i f_i' prod_{j!=i} f_j] / prod f^{m+1}
    RPoly prod_all = RPoly::constant(1.0);
    for (const auto& [f, m] : factors_) prod_all = prod_all * f;
    RPoly sum_term;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        RPoly t = factors_[i].first.derivative().scaled(static_cast<double>(factors_[i].second));
        for (std::size_t j = 0; j < factors_.size(); ++j)
            if (j != i) t = t * factors_[j].first;
        sum_term = sum_term + t;
    }
    CPoly num = num_.derivative() * to_complex(prod_all) - num_ * to_complex(sum_term);
    std::vector<Factor> factors = factors_;
    for (auto& [f, m] : factors) ++m;
    return from_parts(std::move(num), std::move(factors));
}

CScalar RationalFn::eval(double x) const {
    if (is_zero()) return {0.0, 0.0};
    double den = 1.0;
    for (const auto& [f, m] : factors_) {
        const double v = f.eval(x);
        for (int k = 0; k < m; ++k) den *= v;
    }
    return num_.eval(x) / den;
}

std::pair<Ivl, Ivl> RationalFn::eval_ivl(const Ivl& x) const {
    if (is_zero()) return {Ivl::point(0.0), Ivl::point(0.0)};
    Ivl den = Ivl::point(1.0);
    for (const auto& [f, m] : factors_) den = ivl::mul(den, ipow(stellat::eval_ivl(f, x), m));
    const Ivl re = ivl::div(stellat::eval_ivl(real_part(num_), x), den);
    const Ivl im = ivl::div(stellat::eval_ivl(imag_part(num_), x), den);
    return {re, im};
}

std::pair<double, double> RationalFn::decay_envelope() const {
    if (is_zero()) return {0.0, 0.0};
    // Each monic factor f of degree d satisfies |f(x)| >= |x|^d / 2 for
    // |x| >= max(1, 2 * sum of lower |coeffs|); multiply the per-factor
    // bounds and the coefficient-sum bound on the numerator.
    double r0 = 1.0;
    int total_mult = 0;
    for (const auto& [f, m] : factors_) {
        Ivl s = Ivl::point(0.0);
        for (int k = 0; k < f.degree(); ++k)
            s = ivl::add(s, Ivl(0.0, ivl::next_up(std::fabs(f.coeff(static_cast<std::size_t>(k))))));
        r0 = std::max(r0, ivl::next_up(2.0 * s.hi));
        total_mult += m;
    }
    Ivl num_sum = Ivl::point(0.0);
    for (const auto& c : num_.coeffs())
        num_sum = ivl::add(num_sum, Ivl(0.0, ivl::next_up(std::abs(c))));
    const double c_env = ivl::mul(num_sum, Ivl::point(std::ldexp(1.0, total_mult))).hi;
    // |r(x)| <= C / |x|^{D - deg n} <= C/|x| once |x| >= max(R0, 1).
    return {r0, c_env};
}

void RationalFn::check_invariants() const {
    if (is_zero()) {
        if (!factors_.empty()) throw InvariantViolation("RationalFn: zero with denominator factors");
        return;
    }
    for (const auto& c : num_.coeffs())
        if (!is_finite(c)) throw InvariantViolation("RationalFn: non-finite numerator");
    if (num_.degree() + 1 > den_degree())
        throw InvariantViolation("RationalFn: not strictly proper");
    for (const auto& [f, m] : factors_) {
        if (m < 1) throw InvariantViolation("RationalFn: non-positive multiplicity");
        if (f.degree() < 2 || f.degree() % 2 != 0)
            throw InvariantViolation("RationalFn: factor degree must be even and >= 2");
        if (f.leading() != 1.0) throw InvariantViolation("RationalFn: factor not monic");
        if (count_real_roots(f) != 0)
            throw InvariantViolation("RationalFn: denominator factor has a real root");
    }
    if (!std::is_sorted(factors_.begin(), factors_.end(), factor_less))
        throw InvariantViolation("RationalFn: factors not in canonical order");
}

} // namespace stellat
