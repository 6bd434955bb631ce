#include "stellat/state.hpp"

#include "stellat/errors.hpp"
#include "stellat/random_elements.hpp"

#include <cmath>
#include <sstream>

namespace stellat {

State State::point_eval(double x0) { return point_eval(std::vector<double>{x0}); }

State State::point_eval(std::vector<double> x0) {
    State s;
    s.kind_ = StateKind::point_eval;
    s.point_ = std::move(x0);
    return s;
}

State State::finite_measure(std::vector<std::pair<double, double>> weight_point) {
    for (const auto& [w, x] : weight_point) {
        (void)x;
        if (w < 0.0) throw InvariantViolation("finite_measure: negative weight");
    }
    State s;
    s.kind_ = StateKind::finite_measure;
    s.measure_ = std::move(weight_point);
    return s;
}

State State::counterexample() {
    State s;
    s.kind_ = StateKind::counterexample;
    return s;
}

State State::quotient() {
    State s;
    s.kind_ = StateKind::quotient;
    return s;
}

std::string State::name() const {
    switch (kind_) {
        case StateKind::point_eval: return "point_eval";
        case StateKind::finite_measure: return "finite_measure";
        case StateKind::counterexample: return "counterexample";
        case StateKind::quotient: return "quotient";
    }
    return "?";
}

CScalar State::apply(const FuncElement& a) const {
    switch (kind_) {
        case StateKind::point_eval:
            if (static_cast<int>(point_.size()) != a.dim())
                throw DomainMismatch("state: evaluation point dimension mismatch");
            return a.eval(point_);
        case StateKind::finite_measure: {
            CScalar acc{0.0, 0.0};
            for (const auto& [w, x] : measure_) acc += w * a.eval(x);
            return acc;
        }
        case StateKind::quotient:
            // the embedding sends the decaying class to lambda = 0
            if (!a.ap_empty())
                throw DomainMismatch("quotient state: element must lie in the decaying class");
            return {0.0, 0.0};
        case StateKind::counterexample:
            throw DomainMismatch("counterexample state lives on the cube algebra");
    }
    return {0.0, 0.0};
}

CScalar State::apply(const UnitalElement& a) const {
    switch (kind_) {
        case StateKind::point_eval:
        case StateKind::finite_measure:
            return apply(a.base()) + a.unit_coeff() * omega_one();
        case StateKind::quotient:
            if (!a.base().ap_empty())
                throw DomainMismatch("quotient state: base must lie in the decaying class");
            return a.unit_coeff();
        case StateKind::counterexample:
            throw DomainMismatch("counterexample state lives on the cube algebra");
    }
    return {0.0, 0.0};
}

CScalar State::apply(const CubeAlgebraElement& a) const {
    if (kind_ != StateKind::counterexample)
        throw DomainMismatch("cube-algebra elements require the counterexample state");
    CScalar acc{0.0, 0.0};
    for (const auto& [m, c] : a.terms())
        if (m.degree() == 1) acc += c * static_cast<double>(m.generators()[0]);
    return acc;
}

double State::omega_one() const {
    switch (kind_) {
        case StateKind::point_eval: return 1.0;
        case StateKind::quotient: return 1.0;
        case StateKind::finite_measure: {
            double s = 0.0;
            for (const auto& [w, x] : measure_) {
                (void)x;
                s += w;
            }
            return s;
        }
        case StateKind::counterexample:
            throw DomainMismatch("counterexample state: domain has no unit");
    }
    return 0.0;
}

nlohmann::json PositivityReport::to_json() const {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& viol : violations)
        v.push_back({{"trial", viol.trial}, {"what", viol.what}, {"amount", viol.amount}});
    return nlohmann::json{{"suite", suite},
                          {"trials", trials},
                          {"violations", std::move(v)},
                          {"all_exact_zero", all_exact_zero},
                          {"verdict", pass ? "PASS" : "FAIL"}};
}

PositivityReport check_positivity(const State& omega, int trials, std::uint64_t seed) {
    if (trials < 1) throw ConfigError("check_positivity: trials must be >= 1");
    PositivityReport rep;
    rep.suite = "positivity/" + omega.name();
    rep.trials = trials;
    bool exact = omega.kind() == StateKind::counterexample;
    for (int t = 0; t < trials; ++t) {
        CounterRng rng(seed, "positivity", static_cast<std::uint64_t>(t));
        if (omega.kind() == StateKind::counterexample) {
            const CubeAlgebraElement f = random_cube_element(rng);
            const CScalar v = omega.apply(f.star() * f);
            // f*f only contains monomials of degree >= 2, so the defining
            // sum over degree-1 terms is empty: literal zero, not epsilon.
            if (!(v.real() == 0.0 && v.imag() == 0.0)) {
                exact = false;
                rep.violations.push_back({static_cast<std::uint64_t>(t), "omega(f*f) != 0", std::abs(v)});
            }
        } else if (omega.kind() == StateKind::quotient) {
            FuncElement base = random_func_element(rng, {.self_adjoint = false, .c0_only = true});
            const UnitalElement u(std::move(base), rng.complex_gaussian());
            const CScalar v = omega.apply(u.star() * u);
            if (!(v.real() >= -1e-12) || std::fabs(v.imag()) > 1e-12)
                rep.violations.push_back({static_cast<std::uint64_t>(t), "omega(u*u) < 0", v.real()});
        } else {
            const FuncElement f = random_func_element(rng);
            const CScalar v = omega.apply(f.star() * f);
            if (!(v.real() >= -1e-12) || std::fabs(v.imag()) > 1e-12)
                rep.violations.push_back({static_cast<std::uint64_t>(t), "omega(f*f) < 0", v.real()});
        }
    }
    rep.all_exact_zero = exact;
    rep.pass = rep.violations.empty();
    return rep;
}

std::string NoncontinuityTable::to_csv() const {
    std::ostringstream os;
    os << "n,norm,omega,ratio\n";
    for (const auto& r : rows)
        os << r.n << "," << r.norm << "," << r.omega << "," << r.ratio << "\n";
    return os.str();
}

nlohmann::json NoncontinuityTable::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows)
        rows_json.push_back({{"n", r.n}, {"norm", r.norm}, {"omega", r.omega}, {"ratio", r.ratio}});
    return nlohmann::json{{"rows", std::move(rows_json)},
                          {"verdict", unbounded_verdict ? "PASS" : "FAIL"},
                          {"claim", "sup_n |omega(x_n)| / ||x_n|| is unbounded"}};
}

NoncontinuityTable demonstrate_noncontinuity(long long n_max) {
    if (n_max < 1) throw ConfigError("demonstrate_noncontinuity: n_max must be >= 1");
    const State omega = State::counterexample();
    NoncontinuityTable table;
    for (long long n = 1; n <= n_max; n *= 10) {
        NoncontinuityRow row;
        row.n = n;
        row.norm = Monomial::sup_norm(); // coordinate projection peaks at 1
        const CScalar v = omega.apply(CubeAlgebraElement::generator(static_cast<unsigned>(n)));
        row.omega = v.real();
        row.ratio = row.omega / row.norm;
        table.rows.push_back(row);
        if (n > n_max / 10) break;
    }
    bool increasing = true;
    for (std::size_t i = 1; i < table.rows.size(); ++i)
        increasing = increasing && table.rows[i].ratio > table.rows[i - 1].ratio;
    table.unbounded_verdict =
        increasing && !table.rows.empty() &&
        table.rows.back().ratio == static_cast<double>(table.rows.back().n);
    return table;
}

nlohmann::json ContinuityReport::to_json() const {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& viol : violations)
        v.push_back({{"trial", viol.trial}, {"what", viol.what}, {"amount", viol.amount}});
    return nlohmann::json{{"suite", suite},       {"trials", trials},
                          {"replays", replays},   {"violations", std::move(v)},
                          {"max_ratio", max_ratio}, {"omega_one", omega_one},
                          {"verdict", pass ? "PASS" : "FAIL"}};
}

namespace {

UnitalElement random_domain_element(const State& omega, CounterRng& rng, bool self_adjoint) {
    if (omega.kind() == StateKind::quotient) {
        ElementGenOptions opt;
        opt.c0_only = true;
        opt.self_adjoint = self_adjoint;
        FuncElement base = random_func_element(rng, opt);
        const CScalar mu = self_adjoint ? CScalar(rng.normal(), 0.0) : rng.complex_gaussian();
        return UnitalElement(std::move(base), mu);
    }
    ElementGenOptions opt;
    opt.self_adjoint = self_adjoint;
    return UnitalElement(random_func_element(rng, opt), {0.0, 0.0});
}

/// Coefficient bound  sum_k |c_k| rho^k (+ tail)  for the recentred series;
/// bounds ||g(phi + mu)|| without another branch-and-bound run.
double composition_norm_bound(const PowerSeries& f_mu, double rho, int n, double tail) {
    double s = f_mu.abs_coeff(0);
    double p = 1.0;
    for (int k = 1; k <= n; ++k) {
        p = ivl::next_up(p * rho);
        s = ivl::next_up(s + ivl::next_up(f_mu.abs_coeff(k) * p));
    }
    return ivl::next_up(s + tail);
}

} // namespace

ContinuityReport verify_continuity_bound(const State& omega, int trials,
                                         const StateCheckConfig& cfg) {
    if (trials < 1) throw ConfigError("verify_continuity_bound: trials must be >= 1");
    if (omega.kind() == StateKind::counterexample)
        throw DomainMismatch("verify_continuity_bound: the counterexample state has no unital domain");
    ContinuityReport rep;
    rep.suite = "continuity/" + omega.name();
    rep.trials = trials;
    rep.omega_one = omega.omega_one();
    const double w1 = rep.omega_one;

    ComposeConfig compose_cfg;
    compose_cfg.norm_tol = cfg.norm_tol;
    compose_cfg.bb = cfg.bb;

    for (int t = 0; t < trials; ++t) {
        CounterRng rng(cfg.seed, "continuity/" + omega.name(), static_cast<std::uint64_t>(t));
        const bool self_adjoint = t % 2 == 0;
        // trial 0 pins the unit itself: |omega(1)| = omega(1) * ||1|| saturates
        const UnitalElement u =
            t == 0 ? UnitalElement::unit(1) : random_domain_element(omega, rng, self_adjoint);

        const CScalar w = omega.apply(u);
        const NormEnclosure enc = norm_enclosure(u.to_func_element(), cfg.norm_tol, cfg.bb);
        if (enc.upper > 0.0) rep.max_ratio = std::max(rep.max_ratio, std::abs(w) / enc.upper);
        if (std::abs(w) > w1 * enc.upper + cfg.tol)
            rep.violations.push_back({static_cast<std::uint64_t>(t), "|omega(phi)| > omega(1)*||phi||",
                                      std::abs(w) - w1 * enc.upper});

        // U(1) rotation: lambda*omega(phi) real, then only Re(lambda*phi) matters.
        const CScalar lambda = std::abs(w) > 0.0 ? std::conj(w) / std::abs(w) : CScalar(1.0, 0.0);
        const UnitalElement rotated(u.base().scaled(lambda), lambda * u.unit_coeff());
        const UnitalElement re_part =
            UnitalElement((rotated.base() + rotated.star().base()).scaled(0.5),
                          0.5 * (rotated.unit_coeff() + std::conj(rotated.unit_coeff())));
        const NormEnclosure re_enc = norm_enclosure(re_part.to_func_element(), cfg.norm_tol, cfg.bb);
        if (std::abs(w) > w1 * re_enc.upper + cfg.tol)
            rep.violations.push_back({static_cast<std::uint64_t>(t),
                                      "|omega(phi)| > omega(1)*||Re(lambda phi)||",
                                      std::abs(w) - w1 * re_enc.upper});

        // Proof replay on a subsample of the self-adjoint trials: build
        // g(phi) = sqrt(r +- phi) just above the certified norm and check the
        // positivity chain that drives the continuity bound.
        if (self_adjoint && t % cfg.replay_every == 0 && !u.is_zero()) {
            ++rep.replays;
            const double r = std::max(enc.upper, 1e-6) * (1.0 + cfg.replay_eps);
            for (const int sign : {+1, -1}) {
                const PowerSeries g = PowerSeries::sqrt_shift(r, sign);
                auto [psi, cert] = compose_series_unital(g, u, cfg.replay_tol, compose_cfg);
                const PowerSeries g_mu = g.recentered(u.unit_coeff());
                const double psi_bound =
                    composition_norm_bound(g_mu, cert.rho, cert.n_terms, cert.tail_bound);
                const double residual_norm =
                    2.0 * psi_bound * cert.tail_bound + cert.tail_bound * cert.tail_bound;
                const double slack = w1 * residual_norm + 1e-9 * (1.0 + psi_bound * psi_bound);

                const CScalar pos = omega.apply(psi.star() * psi);
                if (!(pos.real() >= -slack))
                    rep.violations.push_back({static_cast<std::uint64_t>(t),
                                              "omega((g phi)*(g phi)) < -slack", pos.real()});
                const double chain = r * w1 + sign * w.real();
                if (!(chain >= -slack))
                    rep.violations.push_back(
                        {static_cast<std::uint64_t>(t), "r*omega(1) +- omega(phi) < -slack", chain});
            }
        }
    }
    rep.pass = rep.violations.empty();
    return rep;
}

nlohmann::json FactorTwoReport::to_json() const {
    return nlohmann::json{{"value", value},
                          {"new_bound", new_bound},
                          {"old_bound", old_bound},
                          {"within_new", within_new},
                          {"saturates_new", saturates_new},
                          {"improvement_active", improvement_active}};
}

FactorTwoReport factor_two_comparison(const State& omega, const UnitalElement& phi,
                                      const StateCheckConfig& cfg) {
    FactorTwoReport rep;
    const double w1 = omega.omega_one();
    const NormEnclosure enc = norm_enclosure(phi.to_func_element(), cfg.norm_tol, cfg.bb);
    rep.value = std::abs(omega.apply(phi));
    rep.new_bound = w1 * enc.upper;
    rep.old_bound = 2.0 * rep.new_bound;
    rep.within_new = rep.value <= rep.new_bound + cfg.tol;
    rep.saturates_new = rep.value >= w1 * enc.lower - 1e-12;
    rep.improvement_active = rep.old_bound > 0.0 && rep.value >= 0.5 * rep.old_bound - 1e-12;
    return rep;
}

} // namespace stellat
