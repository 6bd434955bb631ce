#include "stellat/differential.hpp"

#include "stellat/errors.hpp"

#include <cmath>
#include <sstream>

namespace stellat {

namespace {

nlohmann::json summarize(const FuncElement& e) {
    return nlohmann::json{{"ap_terms", e.ap().term_count()}, {"c0_terms", e.c0().term_count()}};
}

void collect_partials(const FuncElement& a, int order, int first_dir, std::vector<FuncElement>& out) {
    if (order == 0) return;
    // partial derivatives commute, so nondecreasing direction multisets
    // enumerate every distinct mixed partial exactly once
    for (int dir = first_dir; dir < a.dim(); ++dir) {
        FuncElement d = a.derivative(dir);
        d.check_invariants();
        out.push_back(d);
        collect_partials(out.back(), order - 1, dir, out);
    }
}

} // namespace

nlohmann::json DifferentialWitness::to_json() const {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& e : witnesses) w.push_back(summarize(e));
    return nlohmann::json{
        {"in_class", in_class}, {"witness_count", witnesses.size()}, {"witnesses", std::move(w)}};
}

DifferentialWitness in_differential_algebra(const FuncElement& a, int max_order) {
    if (max_order < 1) throw ConfigError("in_differential_algebra: max_order must be >= 1");
    DifferentialWitness w;
    a.check_invariants();
    if (a.dim() == 1) {
        FuncElement d = a;
        for (int k = 0; k < max_order; ++k) {
            d = d.derivative(0);
            d.check_invariants();
            w.witnesses.push_back(d);
        }
    } else {
        collect_partials(a, max_order, 0, w.witnesses);
    }
    w.in_class = true;
    return w;
}

nlohmann::json UnitLeakReport::to_json() const {
    return nlohmann::json{{"claim", "composing sqrt(r + .) with a decaying element yields "
                                    "sqrt(r)*1 plus a decaying remainder, leaving the "
                                    "non-unital class"},
                          {"pass", pass},
                          {"unit_coeff", {{"re", unit_coeff.real()}, {"im", unit_coeff.imag()}}},
                          {"expected_unit", expected_unit},
                          {"base_in_c0_class", base_in_c0_class},
                          {"eval_at_origin", eval_at_origin},
                          {"eval_far", eval_far},
                          {"far_point", far_point},
                          {"certificate", certificate.to_json()},
                          {"narrative", narrative}};
}

UnitLeakReport demonstrate_unit_leak(const FuncElement& phi, double r, double tol,
                                     const ComposeConfig& cfg) {
    if (!phi.ap_empty())
        throw DomainMismatch("demonstrate_unit_leak: phi must lie in the decaying class");
    if (!phi.is_self_adjoint())
        throw DomainMismatch("demonstrate_unit_leak: phi must be self-adjoint");
    const NormEnclosure enc = norm_enclosure(phi, cfg.norm_tol, cfg.bb);
    if (!(enc.upper < r))
        throw SeriesRadiusExceeded("demonstrate_unit_leak: ||phi|| must stay below r");

    UnitLeakReport rep;
    rep.expected_unit = std::sqrt(r);
    auto [psi, cert] = compose_series_unital(PowerSeries::sqrt_shift(r, 1), UnitalElement(phi), tol, cfg);
    rep.certificate = cert;
    rep.unit_coeff = psi.unit_coeff();

    bool base_ok = psi.base().ap_empty();
    try {
        psi.base().check_invariants();
    } catch (const InvariantViolation&) {
        base_ok = false;
    }
    rep.base_in_c0_class = base_ok;
    rep.eval_at_origin = std::abs(psi.eval(0.0));
    rep.far_point = 1e3;
    rep.eval_far = std::abs(psi.eval(rep.far_point));

    const bool unit_exact =
        rep.unit_coeff.imag() == 0.0 && rep.unit_coeff.real() == rep.expected_unit;
    rep.pass = unit_exact && base_ok;

    std::ostringstream s;
    s << "psi = sqrt(" << r << " + phi) splits as psi = c + " << rep.unit_coeff.real()
      << "*1 with c in the decaying class. psi(x) -> " << rep.expected_unit
      << " as |x| -> infinity (|psi(" << rep.far_point << ")| = " << rep.eval_far
      << "), so psi itself never lies in the decaying class and the continuity "
         "argument cannot run inside it alone. Subtracting the unit component, "
         "psi - "
      << rep.unit_coeff.real()
      << "*1 does decay, which is why carrying the unit at the completed, unital "
         "level restores the argument: positivity is applied to psi*psi there and "
         "only the bookkeeping of the borrowed unit changes.";
    rep.narrative = s.str();
    return rep;
}

} // namespace stellat
