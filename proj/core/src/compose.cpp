#include "stellat/compose.hpp"

#include "stellat/errors.hpp"

#include <algorithm>
#include <cmath>

namespace stellat {

namespace {

int pick_truncation_order(const PowerSeries& f, double rho, double tol, int max_terms,
                          double* tail_out) {
    for (int n = 0; n <= max_terms; ++n) {
        const double tail = f.tail_bound(n, rho);
        if (tail <= tol) {
            *tail_out = tail;
            return n;
        }
    }
    throw ToleranceUnreachable("compose_series: no truncation order within " +
                               std::to_string(max_terms) + " terms reaches tail " +
                               std::to_string(tol));
}

FuncElement truncated_polynomial(const PowerSeries& f, const FuncElement& phi, int n) {
    FuncElement acc = FuncElement::zero(phi.dim());
    if (n < 1) return acc;
    FuncElement power = phi;
    acc = phi.scaled(f.coeff(1));
    for (int k = 2; k <= n; ++k) {
        power = power * phi;
        const CScalar c = f.coeff(k);
        if (c != CScalar{0.0, 0.0}) acc = acc + power.scaled(c);
    }
    return acc;
}

} // namespace

nlohmann::json TruncationCertificate::to_json() const {
    return nlohmann::json{{"n_terms", n_terms},
                          {"rho", rho},
                          {"tail_bound", tail_bound},
                          {"method", method == Method::explicit_sum ? "explicit_sum" : "geometric_ratio"}};
}

std::pair<FuncElement, TruncationCertificate> compose_series(const PowerSeries& f,
                                                             const FuncElement& phi, double tol,
                                                             const ComposeConfig& cfg) {
    if (!(tol > 0.0)) throw ConfigError("compose_series: tol must be positive");
    if (f.coeff(0) != CScalar{0.0, 0.0})
        throw NonzeroConstantTerm("compose_series: series must satisfy f(0) = 0 (the non-unital "
                                  "class has no room for a constant term)");
    const NormEnclosure enc = norm_enclosure(phi, cfg.norm_tol, cfg.bb);
    const double rho = enc.upper;
    if (!(rho < f.radius()))
        throw SeriesRadiusExceeded("compose_series: ||phi|| bound " + std::to_string(rho) +
                                   " >= radius " + std::to_string(f.radius()));
    TruncationCertificate cert;
    cert.rho = rho;
    cert.n_terms = pick_truncation_order(f, rho, tol, cfg.max_terms, &cert.tail_bound);
    cert.method = (f.finite_degree() >= 0 && cert.n_terms >= f.finite_degree())
                      ? TruncationCertificate::Method::explicit_sum
                      : TruncationCertificate::Method::geometric_ratio;
    return {truncated_polynomial(f, phi, cert.n_terms), cert};
}

std::pair<UnitalElement, TruncationCertificate> compose_series_unital(const PowerSeries& f,
                                                                      const UnitalElement& u,
                                                                      double tol,
                                                                      const ComposeConfig& cfg) {
    const PowerSeries f_mu = f.recentered(u.unit_coeff());
    const CScalar constant = f_mu.coeff(0);
    const PowerSeries g = f_mu.minus_constant_term();
    auto [base, cert] = compose_series(g, u.base(), tol, cfg);
    return {UnitalElement(std::move(base), constant), cert};
}

nlohmann::json ChainRuleReport::to_json() const {
    return nlohmann::json{{"pass", pass},
                          {"residual_upper", residual_upper},
                          {"sampled_max", sampled_max},
                          {"coeff_identity_residual", coeff_identity_residual},
                          {"combined_tail_bound", combined_tail_bound},
                          {"n_f", n_f},
                          {"n_h", n_h}};
}

ChainRuleReport verify_chain_rule(const PowerSeries& f, const FuncElement& phi, double tol,
                                  const ComposeConfig& cfg) {
    ChainRuleReport rep;

    auto [composed, cert_f] = compose_series(f, phi, tol, cfg);
    rep.n_f = cert_f.n_terms;
    const FuncElement lhs = composed.derivative(0);

    const PowerSeries fdot = f.derivative();
    const CScalar fdot0 = fdot.coeff(0);
    const PowerSeries h = fdot.minus_constant_term();
    auto [h_composed, cert_h] = compose_series(h, phi, tol, cfg);
    rep.n_h = cert_h.n_terms;

    const FuncElement dphi = phi.derivative(0);
    const FuncElement rhs = (h_composed * dphi) + dphi.scaled(fdot0);
    const FuncElement diff = lhs - rhs;

    // Exact truncated-polynomial identity:
    // d/dx sum_{k<=n} c_k phi^k == (sum_{k<=n} k c_k phi^{k-1}) phi'.
    FuncElement poly_deriv = FuncElement::zero(phi.dim());
    {
        FuncElement power = FuncElement::unit(phi.dim()); // phi^0
        for (int k = 1; k <= cert_f.n_terms; ++k) {
            poly_deriv = poly_deriv + power.scaled(f.coeff(k) * static_cast<double>(k));
            if (k < cert_f.n_terms) power = power * phi;
        }
    }
    rep.coeff_identity_residual = (lhs - (poly_deriv * dphi)).max_coeff_magnitude();

    // Analytic gap: lhs truncates f' at order n_f - 1, rhs at order n_h, so
    // the difference is a coefficient slice of f' applied to phi, times phi'.
    const NormEnclosure dphi_norm = norm_enclosure(dphi, cfg.norm_tol, cfg.bb);
    const int low = std::min(rep.n_f - 1, rep.n_h);
    const double slice = fdot.tail_bound(low, cert_f.rho);
    const double noise = 1e-11 * (1.0 + dphi_norm.upper) * (1.0 + phi.max_coeff_magnitude());
    rep.residual_upper = slice * dphi_norm.upper + noise;
    rep.combined_tail_bound =
        (fdot.tail_bound(rep.n_f - 1, cert_f.rho) + fdot.tail_bound(rep.n_h, cert_f.rho)) *
        dphi_norm.upper;

    for (int i = 0; i <= 64; ++i) {
        const double x = -8.0 + 0.25 * i;
        rep.sampled_max = std::max(rep.sampled_max, std::abs(diff.eval(x)));
    }
    rep.pass = rep.residual_upper <= tol + rep.combined_tail_bound + 1e-15 &&
               rep.sampled_max <= rep.residual_upper + 1e-12 &&
               rep.coeff_identity_residual <= 1e-12;
    return rep;
}

} // namespace stellat
