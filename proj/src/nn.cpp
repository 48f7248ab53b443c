#include "bncheck/nn.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "bncheck/errors.hpp"

namespace bncheck::nn {

double activate(Activation kind, double x) {
    switch (kind) {
        case Activation::identity: return x;
        case Activation::sigmoid: return 1.0 / (1.0 + std::exp(-x));
        case Activation::tanh: return std::tanh(x);
        case Activation::relu: return x > 0.0 ? x : 0.0;
    }
    throw std::invalid_argument("activate: unknown activation");
}

double neuron_forward(const Neuron& neuron, std::span<const double> x) {
    if (x.size() != neuron.arity()) {
        throw DimensionError("neuron_forward: input length does not match arity");
    }
    return activate(neuron.activation, dot(neuron.weights, x) + neuron.bias);
}

Layer::Layer(std::vector<Neuron> neurons) : neurons_(std::move(neurons)) {
    if (neurons_.empty()) throw DimensionError("Layer: needs at least one neuron");
    const std::size_t k = neurons_.front().arity();
    if (k == 0) throw DimensionError("Layer: neuron arity must be >= 1");
    for (const auto& n : neurons_) {
        if (n.arity() != k) throw DimensionError("Layer: mixed neuron arities");
    }
}

Layer Layer::linear(const Matrix& weights) {
    std::vector<Neuron> neurons;
    neurons.reserve(weights.rows());
    for (std::size_t i = 0; i < weights.rows(); ++i) {
        auto row = weights.row(i);
        neurons.push_back(Neuron{Vec(row.begin(), row.end()), 0.0, Activation::identity});
    }
    return Layer(std::move(neurons));
}

Vec layer_forward(const Layer& layer, std::span<const double> x) {
    if (x.size() != layer.arity()) {
        throw DimensionError("layer_forward: input length does not match layer arity");
    }
    Vec out;
    out.reserve(layer.size());
    for (const auto& n : layer.neurons()) out.push_back(neuron_forward(n, x));
    return out;
}

Network::Network(std::size_t input_dim, std::vector<Layer> layers)
    : input_dim_(input_dim), layers_(std::move(layers)) {
    if (layers_.empty()) throw DimensionError("Network: needs at least one layer");
    if (input_dim_ == 0) throw DimensionError("Network: input dimension must be >= 1");
    std::size_t expected = input_dim_;
    for (const auto& layer : layers_) {
        if (layer.arity() != expected) {
            throw DimensionError("Network: layer arity breaks the dimension chain");
        }
        expected = layer.size();
    }
}

Vec network_forward(const Network& net, std::span<const double> x) {
    if (x.size() != net.input_dim()) {
        throw DimensionError("network_forward: input length does not match input_dim");
    }
    Vec cur(x.begin(), x.end());
    for (const auto& layer : net.layers()) cur = layer_forward(layer, cur);
    return cur;
}

void validate(const Dataset& data) {
    if (data.inputs.empty()) throw DimensionError("Dataset: needs at least one sample");
    if (data.inputs.size() != data.targets.size()) {
        throw DimensionError("Dataset: input/target counts differ");
    }
    const std::size_t p = data.inputs.front().size();
    if (p == 0) throw DimensionError("Dataset: inputs must have dimension >= 1");
    for (const auto& x : data.inputs) {
        if (x.size() != p) throw DimensionError("Dataset: inputs of mixed dimension");
    }
}

std::vector<double> flat_inputs(const Dataset& data) {
    std::vector<double> flat;
    flat.reserve(data.size() * data.dim());
    for (const auto& x : data.inputs) flat.insert(flat.end(), x.begin(), x.end());
    return flat;
}

Matrix batch_output_matrix(const Network& net, std::size_t layer_index, const Dataset& batch) {
    validate(batch);
    if (layer_index < 1 || layer_index > net.depth()) {
        throw std::out_of_range("batch_output_matrix: layer index outside 1..L");
    }
    if (batch.dim() != net.input_dim()) {
        throw DimensionError("batch_output_matrix: batch dimension does not match input_dim");
    }

    const std::size_t rows = net.layers()[layer_index - 1].size();
    Matrix z(rows, batch.size());
    for (std::size_t m = 0; m < batch.size(); ++m) {
        Vec cur = batch.inputs[m];
        for (std::size_t l = 0; l < layer_index; ++l) {
            cur = layer_forward(net.layers()[l], cur);
        }
        for (std::size_t j = 0; j < rows; ++j) z(j, m) = cur[j];
    }
    return z;
}

}  // namespace bncheck::nn
