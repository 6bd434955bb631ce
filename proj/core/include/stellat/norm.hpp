#pragma once

#include "stellat/func_element.hpp"

#include <cstdint>
#include <vector>

namespace stellat {

/// Certified (or, for irrational-mode elements, best-effort) enclosure of
/// the sup norm over R^d. With certified = true the true sup norm is
/// guaranteed to lie in [lower, upper]. witness is the best probe point
/// found by direct evaluation; when the sup is attained at a finite point
/// (always, except for decaying perturbations whose sup is only approached
/// along far period translates), |a(witness)| matches lower up to roundoff.
struct NormEnclosure {
    double lower = 0.0;
    double upper = 0.0;
    bool certified = false;
    double width_target = 0.0;
    std::vector<double> witness;
};

struct BbConfig {
    /// Cap on interval evaluations across all branch-and-bound phases.
    std::int64_t budget = 4'000'000;
};

/// Sup-norm enclosure of an element.
///
/// Certifiable inputs (all frequencies exact rationals; in dimension > 1
/// additionally only the almost periodic part, as the invariants require)
/// get a verified enclosure of width at most tol:
///   * the almost periodic part is periodic with an exactly computed
///     rational period, so its sup is a branch-and-bound maximization of
///     |ap(x)|^2 over one period (a d-torus for d > 1);
///   * the decaying part has an explicit coefficient-derived envelope
///     |c0(x)| <= C/|x| for |x| >= R0, which both caps the far region and
///     supplies cheap per-box bounds;
///   * the sup over any half line of the periodic part equals its global
///     sup, which gives the rigorous seed  sup |a| >= sup |ap|  used to
///     prune the far region.
/// All interval arithmetic is outward rounded; the branch-and-bound order
/// is a deterministic function of the input, and the evaluation plan pairs
/// conjugate terms so that a and star(a) produce bit-identical enclosures.
///
/// Non-certifiable inputs report certified = false with a dense-sampling
/// lower bound and a coefficient-sum upper bound.
NormEnclosure norm_enclosure(const FuncElement& a, double tol, const BbConfig& cfg = {});

} // namespace stellat
