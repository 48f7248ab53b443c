#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bncheck {

// Shape mismatch between an operand and what the operation expects.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A batch row is numerically constant, so the normalization would divide by
// (nearly) zero. Carries the 0-based row index.
struct DegenerateBatch : std::runtime_error {
    explicit DegenerateBatch(std::size_t row_index)
        : std::runtime_error("degenerate batch: row " + std::to_string(row_index) +
                             " has vanishing standard deviation"),
          row(row_index) {}
    std::size_t row;
};

// Normal equations rejected because their condition number exceeds the bound.
struct IllConditioned : std::runtime_error {
    explicit IllConditioned(double condition)
        : std::runtime_error("Gram matrix too ill-conditioned (cond ~ " +
                             std::to_string(condition) + ")"),
          cond(condition) {}
    double cond;
};

// The inequality's own hypothesis <W0, W*> > 0 does not hold.
struct PreconditionUnmet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The standard optimum is the zero vector; the inequality is undefined there.
struct ZeroOptimum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No restart of the sphere-constrained solver reached the gradient tolerance.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance generation kept producing degenerate draws.
struct GenerationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bncheck
