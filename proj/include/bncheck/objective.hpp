#pragma once

#include <functional>

#include "bncheck/batchnorm.hpp"
#include "bncheck/linalg.hpp"
#include "bncheck/nn.hpp"

namespace bncheck::objective {

// Condition bound for the normal equations; anything worse is rejected so
// the standard optimum stays unique and well defined.
inline constexpr double kCondMax = 1e8;

// Sum of squared residuals of the linear model <w, x> over the learning set.
double standard_cost(const Vec& w, const nn::Dataset& data);

// 2 * sum_i (<w, x_i> - y_i) x_i.
Vec standard_cost_gradient(const Vec& w, const nn::Dataset& data);

// Unique minimizer of standard_cost via the normal equations (Cholesky plus
// refinement). Throws IllConditioned when the Gram condition exceeds cond_max.
Vec least_squares_fit(const nn::Dataset& data, double cond_max = kCondMax);

// Squared-error cost of the normalized single-neuron model. The batch is the
// whole dataset: mu(w) and sigma(w) are recomputed from w on every call.
// Throws DegenerateBatch when sigma(w) <= kTauDeg (in particular for w = 0).
double bn_cost(const Vec& w, const nn::Dataset& data,
               const bn::BNParams& params = bn::BNParams::unit(1));

// Exact gradient of bn_cost, differentiating through mu(w) and sigma(w).
Vec bn_cost_gradient(const Vec& w, const nn::Dataset& data,
                     const bn::BNParams& params = bn::BNParams::unit(1));

// Central differences with the default per-coordinate step
// h_i = 1e-6 * max(1, |w_i|).
Vec finite_diff_gradient(const std::function<double(const Vec&)>& f, const Vec& w);

// Central differences with a fixed step for every coordinate.
Vec finite_diff_gradient(const std::function<double(const Vec&)>& f, const Vec& w, double h);

}  // namespace bncheck::objective
