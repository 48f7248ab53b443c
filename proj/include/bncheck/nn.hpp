#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bncheck/linalg.hpp"

namespace bncheck::nn {

enum class Activation { identity, sigmoid, tanh, relu };

// Closed-form activation value; total on finite inputs, no clamping.
double activate(Activation kind, double x);

// One neuron: x |-> g(<w, x> + b).
struct Neuron {
    Vec weights;
    double bias = 0.0;
    Activation activation = Activation::identity;

    std::size_t arity() const { return weights.size(); }
};

double neuron_forward(const Neuron& neuron, std::span<const double> x);

// A layer of n neurons sharing the input arity k. The constructor rejects
// mixed arities and empty layers up front.
class Layer {
public:
    explicit Layer(std::vector<Neuron> neurons);

    // Identity activations, zero biases: f(x) = W x.
    static Layer linear(const Matrix& weights);

    const std::vector<Neuron>& neurons() const { return neurons_; }
    std::size_t size() const { return neurons_.size(); }
    std::size_t arity() const { return neurons_.front().arity(); }

private:
    std::vector<Neuron> neurons_;
};

Vec layer_forward(const Layer& layer, std::span<const double> x);

// Feed-forward composition f_L(...f_1(x)). Construction validates the
// dimension chain k_1 = input_dim, k_{l+1} = n_l eagerly.
class Network {
public:
    Network(std::size_t input_dim, std::vector<Layer> layers);

    std::size_t input_dim() const { return input_dim_; }
    std::size_t depth() const { return layers_.size(); }
    std::size_t output_dim() const { return layers_.back().size(); }
    const std::vector<Layer>& layers() const { return layers_; }

private:
    std::size_t input_dim_;
    std::vector<Layer> layers_;
};

Vec network_forward(const Network& net, std::span<const double> x);

// A learning set (or batch): N input vectors in R^p with scalar targets.
struct Dataset {
    std::vector<Vec> inputs;
    Vec targets;

    std::size_t size() const { return inputs.size(); }
    std::size_t dim() const { return inputs.empty() ? 0 : inputs.front().size(); }
};

// Checks N >= 1, matching counts and a common input dimension.
void validate(const Dataset& data);

// Inputs flattened row-major (size N*p), for the kernel scan entry points.
std::vector<double> flat_inputs(const Dataset& data);

// Output matrix of layer `layer_index` (1-based, in 1..L) over the batch:
// column m holds the layer output for batch element m.
Matrix batch_output_matrix(const Network& net, std::size_t layer_index, const Dataset& batch);

}  // namespace bncheck::nn
