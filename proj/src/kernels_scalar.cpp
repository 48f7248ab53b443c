#include <cmath>
#include <limits>

#include "kernels_detail.hpp"

namespace bncheck::kern::detail {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

// Per candidate: three passes over the samples (mean + standard cost,
// variance, normalized cost), recomputing z = <w, x_i> each pass instead of
// buffering it. The vector backends mirror this pass structure lane-wise.
void cost_scan_scalar(const DatasetView& data, const double* w, std::size_t k,
                      double gamma, double beta, double* out_std, double* out_bn) {
    const std::size_t n = data.n;
    const std::size_t p = data.p;
    const double inv_n = 1.0 / static_cast<double>(n);

    for (std::size_t c = 0; c < k; ++c) {
        const double* wc = w + c * p;

        double sum_z = 0.0;
        double cost_std = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double z = dot_scalar(data.inputs + i * p, wc, p);
            sum_z += z;
            const double r = z - data.targets[i];
            cost_std += r * r;
        }
        const double mu = sum_z * inv_n;
        if (out_std) out_std[c] = cost_std;

        if (!out_bn) continue;

        double sumsq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double z = dot_scalar(data.inputs + i * p, wc, p);
            const double d = z - mu;
            sumsq += d * d;
        }
        const double sigma = std::sqrt(sumsq * inv_n);
        if (!(sigma > kTauDeg)) {
            out_bn[c] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }

        const double inv_sigma = 1.0 / sigma;
        double cost_bn = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double z = dot_scalar(data.inputs + i * p, wc, p);
            const double r = gamma * (z - mu) * inv_sigma + beta - data.targets[i];
            cost_bn += r * r;
        }
        out_bn[c] = cost_bn;
    }
}

}  // namespace bncheck::kern::detail
