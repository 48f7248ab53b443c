#include "bncheck/batchnorm.hpp"

#include <cmath>

#include "bncheck/errors.hpp"

namespace bncheck::bn {

BatchStats batch_stats(const Matrix& z) {
    const std::size_t rows = z.rows();
    const std::size_t m = z.cols();
    if (m == 0) throw DimensionError("batch_stats: empty batch");

    BatchStats stats{Vec(rows), Vec(rows)};
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < rows; ++j) {
        double sum = 0.0;
        for (std::size_t c = 0; c < m; ++c) sum += z(j, c);
        const double mu = sum * inv_m;

        double sumsq = 0.0;
        for (std::size_t c = 0; c < m; ++c) {
            const double d = z(j, c) - mu;
            sumsq += d * d;
        }
        stats.mu[j] = mu;
        stats.sigma[j] = std::sqrt(sumsq * inv_m);
    }
    return stats;
}

Matrix bn_transform(const Matrix& z, const BNParams& params) {
    if (params.gamma.size() != z.rows() || params.beta.size() != z.rows()) {
        throw DimensionError("bn_transform: parameter lengths do not match row count");
    }
    const BatchStats stats = batch_stats(z);
    for (std::size_t j = 0; j < z.rows(); ++j) {
        if (!(stats.sigma[j] > kTauDeg)) throw DegenerateBatch(j);
    }

    Matrix out(z.rows(), z.cols());
    for (std::size_t j = 0; j < z.rows(); ++j) {
        const double inv_sigma = 1.0 / stats.sigma[j];
        for (std::size_t c = 0; c < z.cols(); ++c) {
            out(j, c) = params.gamma[j] * (z(j, c) - stats.mu[j]) * inv_sigma + params.beta[j];
        }
    }
    return out;
}

double bn_network_forward(std::span<const double> w, std::span<const double> x,
                          const BatchStats& stats, const BNParams& params) {
    if (stats.mu.size() != 1 || stats.sigma.size() != 1 ||
        params.gamma.size() != 1 || params.beta.size() != 1) {
        throw DimensionError("bn_network_forward: expects width-1 stats and parameters");
    }
    if (!(stats.sigma[0] > kTauDeg)) throw DegenerateBatch(0);
    const double z = dot(w, x);
    return params.gamma[0] * (z - stats.mu[0]) / stats.sigma[0] + params.beta[0];
}

}  // namespace bncheck::bn
