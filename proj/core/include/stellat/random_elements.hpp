#pragma once

#include "stellat/cube_algebra.hpp"
#include "stellat/func_element.hpp"
#include "stellat/rng.hpp"

namespace stellat {

/// Knobs for the seeded element families used by the verification suites.
/// Sizes keep certified norms fast: few trigonometric terms on a coarse
/// rational lattice, few decaying terms of small degree.
struct ElementGenOptions {
    int dim = 1;
    int max_trig_terms = 8;
    int max_abs_freq = 8;     // |p/q| <= max_abs_freq
    int max_freq_den = 4;     // q <= max_freq_den (keeps common periods short)
    int max_c0_terms = 3;
    int max_den_factors = 2;  // quadratic factors per denominator
    double coeff_scale = 0.5;
    bool self_adjoint = false;
    bool ap_only = false;
    bool c0_only = false;
};

TrigPoly random_trig_poly(CounterRng& rng, const ElementGenOptions& opt = {});
ModRatSum random_mod_rat_sum(CounterRng& rng, const ElementGenOptions& opt = {});
FuncElement random_func_element(CounterRng& rng, const ElementGenOptions& opt = {});

/// Self-adjoint element of the decaying class with certified norm upper
/// bound strictly below the given cap (rescaled as needed).
FuncElement random_c0_self_adjoint_below(CounterRng& rng, double norm_cap,
                                         const ElementGenOptions& opt = {});

/// Random combination of cube monomials (degree >= 1).
CubeAlgebraElement random_cube_element(CounterRng& rng, int max_degree = 4, int max_generators = 6);

} // namespace stellat
