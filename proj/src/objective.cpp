#include "bncheck/objective.hpp"

#include <cmath>

#include "bncheck/errors.hpp"

namespace bncheck::objective {

namespace {

void check_dims(const Vec& w, const nn::Dataset& data) {
    nn::validate(data);
    if (w.size() != data.dim()) {
        throw DimensionError("objective: weight length does not match input dimension");
    }
}

void check_scalar_params(const bn::BNParams& params) {
    if (params.gamma.size() != 1 || params.beta.size() != 1) {
        throw DimensionError("objective: single-neuron model expects width-1 BN parameters");
    }
}

// Pre-neuron outputs z_i = <w, x_i> plus their batch mean and population
// standard deviation, in the same pass order as bn::batch_stats.
struct BatchLine {
    Vec z;
    double mu;
    double sigma;
};

BatchLine batch_line(const Vec& w, const nn::Dataset& data) {
    const std::size_t n = data.size();
    BatchLine line;
    line.z.resize(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        line.z[i] = dot(w, data.inputs[i]);
        sum += line.z[i];
    }
    line.mu = sum / static_cast<double>(n);
    double sumsq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = line.z[i] - line.mu;
        sumsq += d * d;
    }
    line.sigma = std::sqrt(sumsq / static_cast<double>(n));
    return line;
}

}  // namespace

double standard_cost(const Vec& w, const nn::Dataset& data) {
    check_dims(w, data);
    double cost = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double r = dot(w, data.inputs[i]) - data.targets[i];
        cost += r * r;
    }
    return cost;
}

Vec standard_cost_gradient(const Vec& w, const nn::Dataset& data) {
    check_dims(w, data);
    Vec g(w.size(), 0.0);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double r = dot(w, data.inputs[i]) - data.targets[i];
        for (std::size_t j = 0; j < w.size(); ++j) g[j] += 2.0 * r * data.inputs[i][j];
    }
    return g;
}

Vec least_squares_fit(const nn::Dataset& data, double cond_max) {
    nn::validate(data);
    const std::size_t p = data.dim();
    Matrix gram(p, p);
    Vec rhs(p, 0.0);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const Vec& x = data.inputs[i];
        for (std::size_t a = 0; a < p; ++a) {
            rhs[a] += data.targets[i] * x[a];
            for (std::size_t b = 0; b < p; ++b) gram(a, b) += x[a] * x[b];
        }
    }
    return solve_spd(gram, rhs, cond_max);
}

double bn_cost(const Vec& w, const nn::Dataset& data, const bn::BNParams& params) {
    check_dims(w, data);
    check_scalar_params(params);
    const BatchLine line = batch_line(w, data);
    if (!(line.sigma > bn::kTauDeg)) throw DegenerateBatch(0);

    const double gamma = params.gamma[0];
    const double beta = params.beta[0];
    const double inv_sigma = 1.0 / line.sigma;
    double cost = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double r = gamma * (line.z[i] - line.mu) * inv_sigma + beta - data.targets[i];
        cost += r * r;
    }
    return cost;
}

// With centered inputs u_i = x_i - xbar and c_i = <w, u_i>:
//   sigma(w)   = sqrt(sum c_i^2 / N)
//   grad sigma = sum_m c_m u_m / (N sigma)
//   grad cost  = (2 gamma / sigma) * (A - B / (N sigma^2) * D)
// where A = sum r_i u_i, B = sum r_i c_i, D = sum c_m u_m and
// r_i = gamma c_i / sigma + beta - y_i.
Vec bn_cost_gradient(const Vec& w, const nn::Dataset& data, const bn::BNParams& params) {
    check_dims(w, data);
    check_scalar_params(params);
    const std::size_t n = data.size();
    const std::size_t p = w.size();

    Vec xbar(p, 0.0);
    for (const auto& x : data.inputs)
        for (std::size_t j = 0; j < p; ++j) xbar[j] += x[j];
    for (auto& v : xbar) v /= static_cast<double>(n);

    Vec c(n);
    double sumsq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double ci = 0.0;
        for (std::size_t j = 0; j < p; ++j) ci += w[j] * (data.inputs[i][j] - xbar[j]);
        c[i] = ci;
        sumsq += ci * ci;
    }
    const double sigma = std::sqrt(sumsq / static_cast<double>(n));
    if (!(sigma > bn::kTauDeg)) throw DegenerateBatch(0);

    const double gamma = params.gamma[0];
    const double beta = params.beta[0];
    const double inv_sigma = 1.0 / sigma;

    Vec a_vec(p, 0.0);
    Vec d_vec(p, 0.0);
    double b_scal = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = gamma * c[i] * inv_sigma + beta - data.targets[i];
        b_scal += r * c[i];
        for (std::size_t j = 0; j < p; ++j) {
            const double u = data.inputs[i][j] - xbar[j];
            a_vec[j] += r * u;
            d_vec[j] += c[i] * u;
        }
    }

    const double scale = 2.0 * gamma * inv_sigma;
    const double proj = b_scal / (static_cast<double>(n) * sigma * sigma);
    Vec g(p);
    for (std::size_t j = 0; j < p; ++j) g[j] = scale * (a_vec[j] - proj * d_vec[j]);
    return g;
}

Vec finite_diff_gradient(const std::function<double(const Vec&)>& f, const Vec& w) {
    Vec g(w.size());
    Vec probe = w;
    for (std::size_t j = 0; j < w.size(); ++j) {
        const double h = 1e-6 * std::max(1.0, std::abs(w[j]));
        probe[j] = w[j] + h;
        const double fp = f(probe);
        probe[j] = w[j] - h;
        const double fm = f(probe);
        probe[j] = w[j];
        g[j] = (fp - fm) / (2.0 * h);
    }
    return g;
}

Vec finite_diff_gradient(const std::function<double(const Vec&)>& f, const Vec& w, double h) {
    Vec g(w.size());
    Vec probe = w;
    for (std::size_t j = 0; j < w.size(); ++j) {
        probe[j] = w[j] + h;
        const double fp = f(probe);
        probe[j] = w[j] - h;
        const double fm = f(probe);
        probe[j] = w[j];
        g[j] = (fp - fm) / (2.0 * h);
    }
    return g;
}

}  // namespace bncheck::objective
