#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bncheck::kern {

// Degeneracy threshold on a batch standard deviation. The transform keeps the
// definition's bare square root (no epsilon stabilizer); a sigma at or below
// this bound raises the degenerate-batch error path instead of silently
// biasing the output.
inline constexpr double kTauDeg = 1e-12;

// Borrowed view of a learning set: n samples of dimension p plus scalar
// targets, inputs row-major.
struct DatasetView {
    const double* inputs;
    const double* targets;
    std::size_t n;
    std::size_t p;
};

// Kernel table of one backend.
//
// cost_scan evaluates, for each of k candidate weight rows w[i*p .. i*p+p-1],
// the squared-error cost of the plain linear model and of its
// batch-normalized counterpart, where the batch is the whole dataset and
// gamma/beta are fixed scalars. Candidates whose batch standard deviation is
// <= kTauDeg get a quiet NaN in out_bn. out_std or out_bn may be null when
// only one column is wanted.
struct Kernels {
    const char* name;
    double (*dot)(const double* a, const double* b, std::size_t n);
    void (*cost_scan)(const DatasetView& data, const double* w, std::size_t k,
                      double gamma, double beta, double* out_std, double* out_bn);
};

// Reference implementation, always available.
const Kernels& scalar();

// Best backend the CPU supports, chosen once at startup. The environment
// variable BNCHECK_KERNELS ("scalar", "avx2") overrides the choice.
const Kernels& active();

// Backend names usable on this machine, reference first.
std::vector<std::string> available();

// Forces a backend (test hook). Returns false if the name is unknown or the
// CPU cannot run it.
bool set_active(std::string_view name);

}  // namespace bncheck::kern
