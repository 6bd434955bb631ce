#include "stellat/random_elements.hpp"

#include "stellat/norm.hpp"

#include <cmath>

namespace stellat {

namespace {

Rational random_freq(CounterRng& rng, const ElementGenOptions& opt, bool allow_zero) {
    const int q = rng.uniform_int(1, opt.max_freq_den);
    const int span = opt.max_abs_freq * q;
    int p = rng.uniform_int(-span, span);
    if (!allow_zero && p == 0) p = rng.coin() ? 1 : -1;
    return {p, q};
}

RationalFn random_rational_fn(CounterRng& rng, const ElementGenOptions& opt) {
    // denominator: product of shifted quadratics (x - m)^2 + s^2, s >= 1/2
    RPoly den = RPoly::constant(1.0);
    const int nf = rng.uniform_int(1, opt.max_den_factors);
    for (int i = 0; i < nf; ++i) {
        const double m = rng.uniform(-3.0, 3.0);
        const double s = rng.uniform(0.5, 2.0);
        den = den * RPoly({m * m + s * s, -2.0 * m, 1.0});
    }
    std::vector<CScalar> num(static_cast<std::size_t>(rng.uniform_int(1, den.degree())));
    for (auto& c : num) c = rng.complex_gaussian() * opt.coeff_scale;
    if (num.back() == CScalar{0.0, 0.0}) num.back() = CScalar(opt.coeff_scale, 0.0);
    return {CPoly(std::move(num)), std::move(den)};
}

} // namespace

TrigPoly random_trig_poly(CounterRng& rng, const ElementGenOptions& opt) {
    TrigPoly t(opt.dim);
    const int n = rng.uniform_int(1, opt.max_trig_terms);
    if (opt.dim == 1) {
        for (int i = 0; i < n; ++i) {
            const Rational lam = random_freq(rng, opt, true);
            t = t + TrigPoly::term(lam, rng.complex_gaussian() * opt.coeff_scale);
        }
    } else {
        // multivariate family on a small integer lattice, built from
        // conjugate pairs so the maxima stay isolated and cheap to certify
        for (int i = 0; i < n; ++i) {
            FreqVec f;
            bool nonzero = false;
            for (int k = 0; k < opt.dim; ++k) {
                const int p = rng.uniform_int(-2, 2);
                nonzero = nonzero || p != 0;
                f.push_back(Freq(Rational(p)));
            }
            if (!nonzero) f[0] = Freq(Rational(1));
            const CScalar c = rng.complex_gaussian() * opt.coeff_scale;
            t = t + TrigPoly::term(f, c) + TrigPoly::term(negated(f), std::conj(c));
        }
        t = t + TrigPoly::unit(opt.dim).scaled(CScalar(rng.uniform(0.5, 1.5), 0.0));
    }
    if (opt.self_adjoint && opt.dim == 1) t = (t + t.star()).scaled(0.5);
    return t;
}

ModRatSum random_mod_rat_sum(CounterRng& rng, const ElementGenOptions& opt) {
    ModRatSum m;
    const int n = rng.uniform_int(1, opt.max_c0_terms);
    for (int i = 0; i < n; ++i) {
        const Rational lam = random_freq(rng, opt, true);
        m = m + ModRatSum::term(random_rational_fn(rng, opt), lam);
    }
    if (opt.self_adjoint) m = (m + m.star()).scaled(0.5);
    return m;
}

FuncElement random_func_element(CounterRng& rng, const ElementGenOptions& opt) {
    if (opt.dim > 1 || opt.ap_only) return FuncElement::from_trig(random_trig_poly(rng, opt));
    if (opt.c0_only) return FuncElement::from_c0(random_mod_rat_sum(rng, opt));
    return {random_mod_rat_sum(rng, opt), random_trig_poly(rng, opt)};
}

FuncElement random_c0_self_adjoint_below(CounterRng& rng, double norm_cap,
                                         const ElementGenOptions& opt) {
    ElementGenOptions o = opt;
    o.c0_only = true;
    o.self_adjoint = true;
    FuncElement phi = random_func_element(rng, o);
    if (phi.is_zero()) phi = FuncElement::from_c0(ModRatSum::term(
        RationalFn(CPoly({CScalar(0.5, 0.0)}), RPoly({1.0, 0.0, 1.0})), Rational(0)));
    const NormEnclosure enc = norm_enclosure(phi, 1e-4);
    const double target = norm_cap * rng.uniform(0.3, 0.9);
    return phi.scaled(CScalar(target / std::max(enc.upper, 1e-12), 0.0));
}

CubeAlgebraElement random_cube_element(CounterRng& rng, int max_degree, int max_generators) {
    CubeAlgebraElement e;
    const int terms = rng.uniform_int(1, 5);
    for (int i = 0; i < terms; ++i) {
        const int deg = rng.uniform_int(1, max_degree);
        std::vector<unsigned> gens(static_cast<std::size_t>(deg));
        for (auto& g : gens) g = static_cast<unsigned>(rng.uniform_int(1, max_generators));
        e = e + CubeAlgebraElement::term(Monomial(std::move(gens)), rng.complex_gaussian());
    }
    if (e.is_zero()) e = CubeAlgebraElement::generator(1);
    return e;
}

} // namespace stellat
