#pragma once

#include "stellat/compose.hpp"
#include "stellat/cube_algebra.hpp"
#include "stellat/norm.hpp"
#include "stellat/unital_element.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace stellat {

enum class StateKind { point_eval, finite_measure, counterexample, quotient };

/// Weakly positive *-linear functional on one of the represented algebras.
///
///   point_eval(x0)    omega(a) = a(x0)                 on C_0 (+) C_AP
///   finite_measure    omega(a) = sum w_i a(x_i), w >= 0
///   counterexample    on the cube algebra: x_n -> n, higher monomials -> 0;
///                     weakly positive because f*f has no degree-1 part,
///                     yet unbounded against the sup norm
///   quotient          on the unitalized decaying class: c + lambda*1 -> lambda
class State {
public:
    static State point_eval(double x0);
    static State point_eval(std::vector<double> x0);
    /// Weights must be nonnegative; negative weights are rejected here.
    static State finite_measure(std::vector<std::pair<double, double>> weight_point);
    static State counterexample();
    static State quotient();

    StateKind kind() const { return kind_; }
    std::string name() const;
    int dim() const { return static_cast<int>(point_.size()); }

    CScalar apply(const FuncElement& a) const;
    CScalar apply(const UnitalElement& a) const;
    CScalar apply(const CubeAlgebraElement& a) const;
    /// Value on the unit of the (unitalized) domain.
    double omega_one() const;

private:
    StateKind kind_ = StateKind::point_eval;
    std::vector<double> point_{0.0};
    std::vector<std::pair<double, double>> measure_;
};

struct StateCheckConfig {
    double tol = 1e-9;
    double norm_tol = 1e-3;   // enclosure tolerance for per-trial norms
    double replay_eps = 1e-3; // proof replay radius r = upper * (1 + eps)
    int replay_every = 50;    // run the composition pipeline on every k-th trial
    double replay_tol = 1e-6; // truncation tolerance inside the replay
    BbConfig bb{};
    std::uint64_t seed = 0x5eed;
};

struct Violation {
    std::uint64_t trial = 0;
    std::string what;
    double amount = 0.0;
};

struct PositivityReport {
    std::string suite;
    int trials = 0;
    std::vector<Violation> violations;
    bool all_exact_zero = false; // counterexample kind: omega(f*f) == 0 literally
    bool pass = false;

    nlohmann::json to_json() const;
};

/// omega(f*f) >= 0 on seeded random domain elements; for the counterexample
/// state the value is asserted to be exactly zero (f*f has no degree-1
/// monomials, so the defining sum is empty).
PositivityReport check_positivity(const State& omega, int trials, std::uint64_t seed);

struct NoncontinuityRow {
    long long n = 0;
    double norm = 0.0;  // ||x_n|| = 1, exact
    double omega = 0.0; // omega(x_n) = n
    double ratio = 0.0;
};

struct NoncontinuityTable {
    std::vector<NoncontinuityRow> rows;
    bool unbounded_verdict = false;

    std::string to_csv() const; // header: n,norm,omega,ratio
    nlohmann::json to_json() const;
};

/// Table of (n, ||x_n||, omega(x_n), ratio) for n = 1, 10, ..., n_max under
/// the counterexample state: the ratios equal n, hence grow without bound.
NoncontinuityTable demonstrate_noncontinuity(long long n_max);

struct ContinuityReport {
    std::string suite;
    int trials = 0;
    int replays = 0;
    std::vector<Violation> violations;
    double max_ratio = 0.0; // max |omega(phi)| / ||phi||_upper over the family
    double omega_one = 0.0;
    bool pass = false;

    nlohmann::json to_json() const;
};

/// Checks |omega(phi)| <= omega(1) * ||phi||_upper + tol on seeded random
/// elements of the state's unitalized domain, replays the square-root
/// positivity pipeline on self-adjoint elements at radius just above the
/// certified norm, and runs the U(1) rotation reduction for non-self-adjoint
/// elements. The family includes the unit, so max_ratio also witnesses that
/// the bound's constant omega(1) is attained.
ContinuityReport verify_continuity_bound(const State& omega, int trials,
                                         const StateCheckConfig& cfg = {});

struct FactorTwoReport {
    double value = 0.0;     // |omega(phi)|
    double new_bound = 0.0; // omega(1) * ||phi||_upper
    double old_bound = 0.0; // 2 * omega(1) * ||phi||_upper
    bool within_new = false;
    bool saturates_new = false;     // |omega(phi)| reaches the new bound
    bool improvement_active = false; // the factor-2 bound is not tight here

    nlohmann::json to_json() const;
};

/// Compares |omega(phi)| against the sharp bound omega(1)*||phi|| and the
/// older 2*omega(1)*||phi||; near-constant phi saturates the former,
/// demonstrating the factor 2 was slack.
FactorTwoReport factor_two_comparison(const State& omega, const UnitalElement& phi,
                                      const StateCheckConfig& cfg = {});

} // namespace stellat
