#include "kernels_detail.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <limits>

namespace bncheck::kern::detail {

bool avx2_supported() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s2 = _mm_add_pd(lo, hi);
    const __m128d s1 = _mm_add_sd(s2, _mm_unpackhi_pd(s2, s2));
    return _mm_cvtsd_f64(s1);
}

// Widest sample dimension handled by the vector path; larger p falls back to
// the scalar kernel.
constexpr std::size_t kMaxDim = 64;

}  // namespace

double dot_avx2(const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    __m256d acc = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    }
    double sum = hsum(acc);
    for (; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

// Four candidates per iteration, one lane each. Lanes never interact, so a
// lane performs the same pass structure as the scalar kernel on its own
// candidate (with fused multiply-adds).
void cost_scan_avx2(const DatasetView& data, const double* w, std::size_t k,
                    double gamma, double beta, double* out_std, double* out_bn) {
    const std::size_t n = data.n;
    const std::size_t p = data.p;
    if (p > kMaxDim) {
        cost_scan_scalar(data, w, k, gamma, beta, out_std, out_bn);
        return;
    }

    const double inv_n = 1.0 / static_cast<double>(n);
    const __m256d v_inv_n = _mm256_set1_pd(inv_n);
    const __m256d v_gamma = _mm256_set1_pd(gamma);
    const __m256d v_beta = _mm256_set1_pd(beta);
    const __m256d v_tau = _mm256_set1_pd(kTauDeg);
    const __m256d v_nan = _mm256_set1_pd(std::numeric_limits<double>::quiet_NaN());

    __m256d wcol[kMaxDim];

    std::size_t c = 0;
    for (; c + 4 <= k; c += 4) {
        const double* w0 = w + (c + 0) * p;
        const double* w1 = w + (c + 1) * p;
        const double* w2 = w + (c + 2) * p;
        const double* w3 = w + (c + 3) * p;
        for (std::size_t j = 0; j < p; ++j) {
            wcol[j] = _mm256_set_pd(w3[j], w2[j], w1[j], w0[j]);
        }

        __m256d sum_z = _mm256_setzero_pd();
        __m256d cost_std = _mm256_setzero_pd();
        for (std::size_t i = 0; i < n; ++i) {
            const double* x = data.inputs + i * p;
            __m256d z = _mm256_setzero_pd();
            for (std::size_t j = 0; j < p; ++j) {
                z = _mm256_fmadd_pd(wcol[j], _mm256_set1_pd(x[j]), z);
            }
            sum_z = _mm256_add_pd(sum_z, z);
            const __m256d r = _mm256_sub_pd(z, _mm256_set1_pd(data.targets[i]));
            cost_std = _mm256_fmadd_pd(r, r, cost_std);
        }
        const __m256d mu = _mm256_mul_pd(sum_z, v_inv_n);
        if (out_std) _mm256_storeu_pd(out_std + c, cost_std);

        if (!out_bn) continue;

        __m256d sumsq = _mm256_setzero_pd();
        for (std::size_t i = 0; i < n; ++i) {
            const double* x = data.inputs + i * p;
            __m256d z = _mm256_setzero_pd();
            for (std::size_t j = 0; j < p; ++j) {
                z = _mm256_fmadd_pd(wcol[j], _mm256_set1_pd(x[j]), z);
            }
            const __m256d d = _mm256_sub_pd(z, mu);
            sumsq = _mm256_fmadd_pd(d, d, sumsq);
        }
        const __m256d sigma = _mm256_sqrt_pd(_mm256_mul_pd(sumsq, v_inv_n));
        const __m256d ok = _mm256_cmp_pd(sigma, v_tau, _CMP_GT_OQ);
        const __m256d inv_sigma = _mm256_div_pd(_mm256_set1_pd(1.0), sigma);

        __m256d cost_bn = _mm256_setzero_pd();
        for (std::size_t i = 0; i < n; ++i) {
            const double* x = data.inputs + i * p;
            __m256d z = _mm256_setzero_pd();
            for (std::size_t j = 0; j < p; ++j) {
                z = _mm256_fmadd_pd(wcol[j], _mm256_set1_pd(x[j]), z);
            }
            __m256d r = _mm256_mul_pd(_mm256_mul_pd(v_gamma, _mm256_sub_pd(z, mu)), inv_sigma);
            r = _mm256_sub_pd(_mm256_add_pd(r, v_beta), _mm256_set1_pd(data.targets[i]));
            cost_bn = _mm256_fmadd_pd(r, r, cost_bn);
        }
        _mm256_storeu_pd(out_bn + c, _mm256_blendv_pd(v_nan, cost_bn, ok));
    }

    if (c < k) {
        cost_scan_scalar(data, w + c * p, k - c, gamma, beta,
                         out_std ? out_std + c : nullptr,
                         out_bn ? out_bn + c : nullptr);
    }
}

}  // namespace bncheck::kern::detail

#endif  // x86_64
