#include "bncheck/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bncheck/errors.hpp"
#include "bncheck/kernels.hpp"

namespace bncheck {

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw DimensionError("dot: length mismatch");
    }
    return kern::active().dot(a.data(), b.data(), a.size());
}

double norm(std::span<const double> v) {
    return std::sqrt(kern::active().dot(v.data(), v.data(), v.size()));
}

Vec normalized(std::span<const double> v) {
    const double n = norm(v);
    if (!(n > 0.0)) throw DimensionError("normalized: zero vector");
    Vec out(v.begin(), v.end());
    for (auto& x : out) x /= n;
    return out;
}

Vec symmetric_eigenvalues(Matrix a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw DimensionError("symmetric_eigenvalues: square matrix required");
    if (n == 0) return {};

    // Cyclic Jacobi sweeps; plenty for the tiny matrices seen here.
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (off < 1e-30) break;

        for (std::size_t pidx = 0; pidx < n; ++pidx) {
            for (std::size_t q = pidx + 1; q < n; ++q) {
                const double apq = a(pidx, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(pidx, pidx)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t kk = 0; kk < n; ++kk) {
                    const double akp = a(kk, pidx);
                    const double akq = a(kk, q);
                    a(kk, pidx) = c * akp - s * akq;
                    a(kk, q) = s * akp + c * akq;
                }
                for (std::size_t kk = 0; kk < n; ++kk) {
                    const double apk = a(pidx, kk);
                    const double aqk = a(q, kk);
                    a(pidx, kk) = c * apk - s * aqk;
                    a(q, kk) = s * apk + c * aqk;
                }
            }
        }
    }

    Vec eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

double spd_condition(const Matrix& a) {
    const Vec eig = symmetric_eigenvalues(a);
    if (eig.empty()) return std::numeric_limits<double>::infinity();
    const double lo = eig.front();
    const double hi = eig.back();
    if (!(lo > 0.0) || !std::isfinite(hi)) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

namespace {

// Plain Cholesky; returns false when a pivot is not positive.
bool cholesky(const Matrix& a, Matrix& l) {
    const std::size_t n = a.rows();
    l = Matrix(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a(i, j);
            for (std::size_t kk = 0; kk < j; ++kk) s -= l(i, kk) * l(j, kk);
            if (i == j) {
                if (!(s > 0.0)) return false;
                l(i, j) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return true;
}

Vec cholesky_solve(const Matrix& l, const Vec& b) {
    const std::size_t n = l.rows();
    Vec y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t j = 0; j < i; ++j) s -= l(i, j) * y[j];
        y[i] = s / l(i, i);
    }
    Vec x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = y[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= l(j, ii) * x[j];
        x[ii] = s / l(ii, ii);
    }
    return x;
}

}  // namespace

Vec solve_spd(const Matrix& a, const Vec& b, double cond_max) {
    if (a.rows() != a.cols() || a.rows() != b.size()) {
        throw DimensionError("solve_spd: shape mismatch");
    }
    const double cond = spd_condition(a);
    if (!(cond <= cond_max)) throw IllConditioned(cond);

    Matrix l;
    if (!cholesky(a, l)) throw IllConditioned(std::numeric_limits<double>::infinity());
    Vec x = cholesky_solve(l, b);

    // Two rounds of refinement push the residual to roundoff level even for
    // conditions near the acceptance bound.
    const std::size_t n = b.size();
    for (int round = 0; round < 2; ++round) {
        Vec r(n);
        for (std::size_t i = 0; i < n; ++i) {
            double s = b[i];
            for (std::size_t j = 0; j < n; ++j) s -= a(i, j) * x[j];
            r[i] = s;
        }
        const Vec dx = cholesky_solve(l, r);
        for (std::size_t i = 0; i < n; ++i) x[i] += dx[i];
    }
    return x;
}

}  // namespace bncheck
