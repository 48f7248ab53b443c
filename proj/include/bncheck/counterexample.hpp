#pragma once

#include <stdexcept>
#include <string>

#include "bncheck/linalg.hpp"
#include "bncheck/nn.hpp"

namespace bncheck::cex {

// Thresholds of the verification pipeline. "Vanishes" and "does not vanish"
// sit five orders of magnitude apart on this problem, so the two tolerances
// cannot be confused.
inline constexpr double kTolFit = 1e-9;          // fitted optimum vs (1, 3)
inline constexpr double kTolGradZero = 1e-9;     // standard gradient at the fit
inline constexpr double kTolNonCritical = 1e-3;  // "gradient does not vanish"
inline constexpr double kTolCritical = 1e-8;     // "gradient vanishes"
inline constexpr double kTolRhs = 1e-12;         // inequality right-hand side
inline constexpr double kCurvatureStep = 1e-4;   // radians, tangential second difference

// The three-sample learning set with y = x1^2 + x2^2:
// (1,1) -> 2, (1,2) -> 5, (2,3) -> 13.
nn::Dataset example_dataset();

// Raised when a verification stage's assertion fails; carries the stage name.
struct StageFailure : std::runtime_error {
    StageFailure(std::string stage_name, const std::string& what)
        : std::runtime_error(stage_name + ": " + what), stage(std::move(stage_name)) {}
    std::string stage;
};

struct StandardOptimum {
    Vec w_star;
    double grad_norm;
};

// Fits the standard network and checks the optimum is (1, 3) within kTolFit
// with gradient norm <= kTolGradZero there.
StandardOptimum verify_standard_optimum(const nn::Dataset& data);

// Gradient of the normalized cost at W0 (gamma = 1, beta = 0); checks its
// norm exceeds kTolNonCritical, i.e. W0 is *not* a critical point.
Vec verify_bn_noncritical(const nn::Dataset& data, const Vec& w0);

struct RayCheck {
    Vec direction;                 // (5, 3) / sqrt(34)
    double grad_norm;              // must be <= kTolCritical
    double second_difference;      // tangential curvature estimate, must be > 0
};

// Checks the claimed ray of minima: the normalized cost is critical along
// 3 w1 = 5 w2 (w1 > 0) with positive tangential curvature.
RayCheck verify_ray_minima(const nn::Dataset& data);

// True when the normalized cost has (numerically) vanishing gradient at w.
bool bn_critical_at(const nn::Dataset& data, const Vec& w, double tol = kTolNonCritical);

enum class Verdict { lemma_violated, lemma_not_violated };
enum class Conclusion { forces_What_equals_W0 };

struct CounterexampleReport {
    Vec standard_optimum;
    double standard_grad_norm_at_optimum = 0.0;
    Vec bn_gradient_at_W0;
    double bn_grad_norm_at_W0 = 0.0;
    Vec critical_direction;
    double bn_grad_norm_at_critical = 0.0;
    double tangential_second_difference = 0.0;
    double inequality_lhs = 0.0;
    double inequality_rhs = 0.0;
    Conclusion implied_conclusion = Conclusion::forces_What_equals_W0;
    Verdict verdict = Verdict::lemma_not_violated;
    std::string failed_stage;  // empty when every stage passed

    friend bool operator==(const CounterexampleReport&, const CounterexampleReport&) = default;
};

// Test hook: makes one stage operate on corrupted input so its failure path
// can be driven from the outside.
enum class Fault { none, standard_optimum, bn_noncritical, ray_minima, inequality };

// Runs all stages in order (standard optimum, non-criticality at W0, ray of
// minima, inequality right-hand side with W0 = W*) and aggregates the
// verdict: lemma_violated iff the right-hand side vanishes while the
// gradient at W0 does not. A failing stage yields lemma_not_violated with
// the stage recorded.
CounterexampleReport run_full_verification(const nn::Dataset& data, const Vec& w0,
                                           Fault fault = Fault::none);

// Same, on the built-in learning set with W0 = (1, 3).
CounterexampleReport run_full_verification(Fault fault = Fault::none);

}  // namespace bncheck::cex
