#pragma once

#include "stellat/compose.hpp"
#include "stellat/unital_element.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace stellat {

/// Result of the executable closure check: the element together with its
/// first derivatives (all mixed partials up to max_order for d > 1), each
/// of which passed the full class invariant checker.
struct DifferentialWitness {
    bool in_class = false;
    std::vector<FuncElement> witnesses;

    nlohmann::json to_json() const;
};

/// Checks that the element and all its (mixed) partial derivatives up to
/// max_order stay inside the represented class. For the representable
/// classes this holds by construction -- one derivative step maps the class
/// into itself -- so the check doubles as a regression test of that closure.
DifferentialWitness in_differential_algebra(const FuncElement& a, int max_order);

/// Demonstration that composing sqrt(r + .) with a decaying self-adjoint
/// element leaves the non-unital class: the result is sqrt(r)*1 plus a
/// decaying remainder, so it tends to sqrt(r) at infinity instead of 0.
/// The continuity argument that pretended the square root stayed in the
/// class fails here; tracking the borrowed unit explicitly is the repair.
struct UnitLeakReport {
    bool pass = false;
    CScalar unit_coeff{0.0, 0.0};
    double expected_unit = 0.0;
    bool base_in_c0_class = false;
    double eval_at_origin = 0.0;
    double eval_far = 0.0; // |psi(x)| at |x| = far_point
    double far_point = 0.0;
    TruncationCertificate certificate;
    std::string narrative;

    nlohmann::json to_json() const;
};

UnitLeakReport demonstrate_unit_leak(const FuncElement& phi, double r, double tol = 1e-9,
                                     const ComposeConfig& cfg = {});

} // namespace stellat
