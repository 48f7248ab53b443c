#pragma once

#include "bncheck/kernels.hpp"

// Internal kernel entry points shared between the dispatch table and the
// vector backends (which reuse the scalar routines for tails).
namespace bncheck::kern::detail {

double dot_scalar(const double* a, const double* b, std::size_t n);

void cost_scan_scalar(const DatasetView& data, const double* w, std::size_t k,
                      double gamma, double beta, double* out_std, double* out_bn);

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_supported();
double dot_avx2(const double* a, const double* b, std::size_t n);
void cost_scan_avx2(const DatasetView& data, const double* w, std::size_t k,
                    double gamma, double beta, double* out_std, double* out_bn);
#endif

}  // namespace bncheck::kern::detail
