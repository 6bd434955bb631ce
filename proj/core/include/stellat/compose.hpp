#pragma once

#include "stellat/norm.hpp"
#include "stellat/power_series.hpp"
#include "stellat/unital_element.hpp"

#include <nlohmann/json.hpp>

#include <utility>

namespace stellat {

/// Evidence that the truncated composition is within tail_bound of the full
/// series: tail_bound >= sum_{k > n_terms} |c_k| rho^k with rho a certified
/// upper bound of the argument's sup norm.
struct TruncationCertificate {
    enum class Method { explicit_sum, geometric_ratio };
    int n_terms = 0;
    double rho = 0.0;
    double tail_bound = 0.0;
    Method method = Method::explicit_sum;

    nlohmann::json to_json() const;
};

struct ComposeConfig {
    double norm_tol = 1e-6; // tolerance for the argument's norm enclosure
    BbConfig bb{};
    int max_terms = 4096;
};

/// Truncated composition f(phi) = sum_{k=1}^{n} c_k phi^k for series with
/// f(0) = 0; the certificate pins the truncation error. Requires the
/// certified norm bound of phi to stay below the convergence radius.
std::pair<FuncElement, TruncationCertificate> compose_series(const PowerSeries& f,
                                                             const FuncElement& phi, double tol,
                                                             const ComposeConfig& cfg = {});

/// Composition with a unit-carrying argument u = phi + mu*1. Recentre the
/// series at mu, split off the new constant term, compose the rest with phi
/// and return it together with f(mu) on the unit:
///   f(u) = [f_mu - f_mu(0)](phi) + f(mu)*1.
/// Works for any f analytic on a disc of radius > |mu| + ||phi||; the
/// constant-term restriction disappears because the unit absorbs it.
std::pair<UnitalElement, TruncationCertificate> compose_series_unital(const PowerSeries& f,
                                                                      const UnitalElement& u,
                                                                      double tol,
                                                                      const ComposeConfig& cfg = {});

/// Chain-rule verification for the truncated calculus:
///   d/dx [f(phi)]  vs  (h(phi) + f'(0)) * phi'   with h = f' - f'(0).
/// The truncated polynomials satisfy the identity exactly on coefficients;
/// the analytic gap between the two truncation orders is bounded by the
/// derivative series' tail times ||phi'||.
struct ChainRuleReport {
    bool pass = false;
    double residual_upper = 0.0;       // sup-norm enclosure upper bound of the difference
    double sampled_max = 0.0;          // spot-check of the difference on a grid
    double coeff_identity_residual = 0.0;
    double combined_tail_bound = 0.0;
    int n_f = 0;
    int n_h = 0;

    nlohmann::json to_json() const;
};

ChainRuleReport verify_chain_rule(const PowerSeries& f, const FuncElement& phi, double tol,
                                  const ComposeConfig& cfg = {});

} // namespace stellat
