#pragma once

#include <setbound/activation.hpp>

#include <Eigen/Core>

#include <vector>

namespace setbound {

// One fully connected layer: x -> act(W x + b).
struct Layer {
  Eigen::MatrixXd weights;  // d_out x d_in
  Eigen::VectorXd bias;     // d_out
  Activation activation;

  Eigen::Index in_dim() const { return weights.cols(); }
  Eigen::Index out_dim() const { return weights.rows(); }
};

// Feedforward network as an ordered list of layers. Immutable after
// construction, so instances can be shared freely across worker threads.
class Network {
 public:
  Network() = default;
  explicit Network(std::vector<Layer> layers);

  Eigen::Index input_dim() const { return layers_.empty() ? 0 : layers_.front().in_dim(); }
  Eigen::Index output_dim() const { return layers_.empty() ? 0 : layers_.back().out_dim(); }
  int layer_count() const { return static_cast<int>(layers_.size()); }
  const Layer& layer(int i) const { return layers_.at(static_cast<size_t>(i)); }
  const std::vector<Layer>& layers() const { return layers_; }

  // Widths as [input_dim, d_1, ..., d_l].
  std::vector<Eigen::Index> widths() const;

  Eigen::VectorXd forward(const Eigen::VectorXd& x) const;

  // Sub-network computing layers from..=to (inclusive, 0-based).
  Network slice(int from_layer, int to_layer) const;

 private:
  std::vector<Layer> layers_;
};

}  // namespace setbound
