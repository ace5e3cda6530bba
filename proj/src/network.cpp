#include <setbound/network.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace setbound {

Network::Network(std::vector<Layer> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw std::invalid_argument("network needs at least one layer");
  for (size_t i = 0; i < layers_.size(); ++i) {
    const Layer& l = layers_[i];
    if (l.weights.rows() == 0 || l.weights.cols() == 0)
      throw std::invalid_argument("layer " + std::to_string(i) + ": empty weight matrix");
    if (l.bias.size() != l.weights.rows())
      throw std::invalid_argument("layer " + std::to_string(i) + ": bias length " +
                                  std::to_string(l.bias.size()) + " does not match " +
                                  std::to_string(l.weights.rows()) + " weight rows");
    if (i > 0 && l.in_dim() != layers_[i - 1].out_dim())
      throw std::invalid_argument("layer " + std::to_string(i) + ": input dimension " +
                                  std::to_string(l.in_dim()) + " does not chain with previous output " +
                                  std::to_string(layers_[i - 1].out_dim()));
    validate_activation(l.activation);
  }
}

std::vector<Eigen::Index> Network::widths() const {
  std::vector<Eigen::Index> w;
  w.reserve(layers_.size() + 1);
  w.push_back(input_dim());
  for (const Layer& l : layers_) w.push_back(l.out_dim());
  return w;
}

Eigen::VectorXd Network::forward(const Eigen::VectorXd& x) const {
  if (x.size() != input_dim())
    throw std::invalid_argument("forward: input dimension " + std::to_string(x.size()) +
                                " does not match network input " + std::to_string(input_dim()));
  Eigen::VectorXd v = x;
  for (const Layer& l : layers_) {
    v = (l.weights * v + l.bias).eval();
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = act_value(l.activation, v(i));
  }
  return v;
}

Network Network::slice(int from_layer, int to_layer) const {
  if (from_layer < 0 || to_layer < from_layer || to_layer >= layer_count())
    throw std::out_of_range("slice: layer range [" + std::to_string(from_layer) + ", " +
                            std::to_string(to_layer) + "] out of bounds for " +
                            std::to_string(layer_count()) + " layers");
  return Network(std::vector<Layer>(layers_.begin() + from_layer, layers_.begin() + to_layer + 1));
}

}  // namespace setbound
