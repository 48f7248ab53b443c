#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bncheck {

using Vec = std::vector<double>;

// Dense row-major matrix. Everything in this project is desk-scale, so there
// is no blocking or sparsity.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::span<const double> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Inner product through the active kernel backend. Throws DimensionError on
// length mismatch.
double dot(std::span<const double> a, std::span<const double> b);

double norm(std::span<const double> v);

// v / ||v||; throws DimensionError for the zero vector.
Vec normalized(std::span<const double> v);

// Eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi rotations.
Vec symmetric_eigenvalues(Matrix a);

// lambda_max / lambda_min for a symmetric matrix; +inf when the matrix is
// singular or not positive definite.
double spd_condition(const Matrix& a);

// Solves a*x = b for symmetric positive definite a via Cholesky with two
// rounds of iterative refinement. Throws IllConditioned when
// spd_condition(a) > cond_max or the factorization breaks down.
Vec solve_spd(const Matrix& a, const Vec& b, double cond_max);

}  // namespace bncheck
