#include "stellat/mod_rat_sum.hpp"

#include "stellat/errors.hpp"

#include <algorithm>
#include <cmath>

namespace stellat {

namespace {

// Canonical accumulation order for merged same-frequency contributions,
// mirroring the scalar rule in trig_poly.cpp: the key is invariant under
// coefficient conjugation so conjugate-symmetric inputs merge to exactly
// conjugate-symmetric sums.
struct RatConjStableLess {
    bool operator()(const RationalFn& a, const RationalFn& b) const {
        if (a.num().coeffs().size() != b.num().coeffs().size())
            return a.num().coeffs().size() < b.num().coeffs().size();
        for (std::size_t i = 0; i < a.num().coeffs().size(); ++i) {
            const CScalar x = a.num().coeffs()[i], y = b.num().coeffs()[i];
            if (x.real() != y.real()) return x.real() < y.real();
            const double ia = std::fabs(x.imag()), ib = std::fabs(y.imag());
            if (ia != ib) return ia < ib;
            if (x.imag() != y.imag()) return x.imag() < y.imag();
        }
        // tie on numerators: order by denominator structure
        const auto &fa = a.den_factors(), &fb = b.den_factors();
        if (fa.size() != fb.size()) return fa.size() < fb.size();
        for (std::size_t i = 0; i < fa.size(); ++i) {
            if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
            if (fa[i].first.coeffs() != fb[i].first.coeffs())
                return fa[i].first.coeffs() < fb[i].first.coeffs();
        }
        return false;
    }
};

} // namespace

ModRatSum ModRatSum::term(RationalFn r, Freq freq) {
    ModRatSum m;
    if (!r.is_zero()) m.terms_.emplace(std::move(freq), std::move(r));
    return m;
}

ModRatSum ModRatSum::from_contributions(std::map<Freq, std::vector<RationalFn>>&& acc) {
    ModRatSum m;
    for (auto& [f, vs] : acc) {
        std::sort(vs.begin(), vs.end(), RatConjStableLess{});
        RationalFn s;
        for (auto& r : vs) s = s + r;
        if (!s.is_zero()) m.terms_.emplace(f, std::move(s));
    }
    return m;
}

ModRatSum ModRatSum::operator-() const {
    ModRatSum m;
    for (const auto& [f, r] : terms_) m.terms_.emplace(f, -r);
    return m;
}

ModRatSum operator+(const ModRatSum& a, const ModRatSum& b) {
    std::map<Freq, std::vector<RationalFn>> acc;
    for (const auto& [f, r] : a.terms_) acc[f].push_back(r);
    for (const auto& [f, r] : b.terms_) acc[f].push_back(r);
    return ModRatSum::from_contributions(std::move(acc));
}

ModRatSum operator*(const ModRatSum& a, const ModRatSum& b) {
    std::map<Freq, std::vector<RationalFn>> acc;
    for (const auto& [fa, ra] : a.terms_)
        for (const auto& [fb, rb] : b.terms_) acc[fa + fb].push_back(ra * rb);
    return ModRatSum::from_contributions(std::move(acc));
}

ModRatSum ModRatSum::scaled(CScalar s) const {
    ModRatSum m;
    for (const auto& [f, r] : terms_) {
        RationalFn v = r.scaled(s);
        if (!v.is_zero()) m.terms_.emplace(f, std::move(v));
    }
    return m;
}

ModRatSum ModRatSum::mul_trig(const TrigPoly& t) const {
    if (t.dim() != 1) throw DimensionMismatch("ModRatSum: trig factor must be 1-d");
    std::map<Freq, std::vector<RationalFn>> acc;
    for (const auto& [fr, r] : terms_)
        for (const auto& [ft, c] : t.terms()) acc[fr + ft[0]].push_back(r.scaled(c));
    return from_contributions(std::move(acc));
}

ModRatSum ModRatSum::star() const {
    ModRatSum m;
    for (const auto& [f, r] : terms_) m.terms_.emplace(-f, r.conj());
    return m;
}

ModRatSum ModRatSum::derivative() const {
    // d/dx [r e^{i lam x}] = (r' + i lam r) e^{i lam x}
    std::map<Freq, std::vector<RationalFn>> acc;
    for (const auto& [f, r] : terms_) {
        RationalFn d = r.derivative() + r.scaled(CScalar(0.0, f.approx()));
        if (!d.is_zero()) acc[f].push_back(std::move(d));
    }
    return from_contributions(std::move(acc));
}

CScalar ModRatSum::eval(double x) const {
    CScalar acc{0.0, 0.0};
    for (const auto& [f, r] : terms_) {
        const double phase = f.approx() * x;
        acc += r.eval(x) * CScalar(std::cos(phase), std::sin(phase));
    }
    return acc;
}

bool ModRatSum::all_freqs_exact() const {
    for (const auto& [f, r] : terms_) {
        (void)r;
        if (!f.is_exact()) return false;
    }
    return true;
}

bool ModRatSum::is_self_adjoint() const {
    for (const auto& [f, r] : terms_) {
        auto it = terms_.find(-f);
        if (it == terms_.end()) return false;
        if (!(it->second == r.conj())) return false;
    }
    return true;
}

std::pair<double, double> ModRatSum::decay_envelope() const {
    double r0 = 1.0, c = 0.0;
    for (const auto& [f, r] : terms_) {
        (void)f;
        const auto [tr0, tc] = r.decay_envelope();
        r0 = std::max(r0, tr0);
        c = ivl::add(Ivl::point(c), Ivl::point(tc)).hi;
    }
    return {r0, c};
}

void ModRatSum::check_invariants() const {
    for (const auto& [f, r] : terms_) {
        (void)f;
        if (r.is_zero()) throw InvariantViolation("ModRatSum: stored zero term");
        r.check_invariants();
    }
}

} // namespace stellat
