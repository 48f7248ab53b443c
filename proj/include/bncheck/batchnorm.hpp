#pragma once

#include <cstddef>
#include <span>

#include "bncheck/kernels.hpp"
#include "bncheck/linalg.hpp"

namespace bncheck::bn {

// Sigma at or below this counts as a constant row; the transform refuses to
// divide instead of stabilizing with an epsilon.
inline constexpr double kTauDeg = kern::kTauDeg;

// Per-row batch mean and population standard deviation (divisor M).
struct BatchStats {
    Vec mu;
    Vec sigma;
};

// Fixed affine parameters of the transform, one pair per row.
struct BNParams {
    Vec gamma;
    Vec beta;

    // gamma = 1, beta = 0 for every row.
    static BNParams unit(std::size_t rows) { return {Vec(rows, 1.0), Vec(rows, 0.0)}; }
};

// Row statistics of an n x M output matrix. Always computed in the same
// sequential pass order (sum, then centered squares), so results are
// identical from run to run.
BatchStats batch_stats(const Matrix& z);

// Entry (j, m) -> gamma_j * (z_jm - mu_j) / sigma_j + beta_j, with mu and
// sigma recomputed from z. Throws DegenerateBatch(j) on the first row whose
// sigma is <= kTauDeg.
Matrix bn_transform(const Matrix& z, const BNParams& params);

// Single linear neuron with normalized output:
// gamma * (<w, x> - mu) / sigma + beta, with mu/sigma taken from `stats`
// (width 1, computed beforehand over the intended batch).
double bn_network_forward(std::span<const double> w, std::span<const double> x,
                          const BatchStats& stats, const BNParams& params);

}  // namespace bncheck::bn
