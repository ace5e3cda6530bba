#include <setbound/gen.hpp>

#include <setbound/oracle.hpp>
#include <setbound/topology.hpp>

#include <cmath>
#include <stdexcept>

namespace setbound {

int structural_suffix(const std::vector<Eigen::Index>& widths) {
  const int layers = static_cast<int>(widths.size()) - 1;
  int s = layers;
  for (int i = layers - 1; i >= 0; --i) {
    if (widths[static_cast<size_t>(i) + 1] > widths[static_cast<size_t>(i)]) break;
    s = i;
  }
  return s;
}

Network gen_net(const std::vector<Eigen::Index>& widths, const Activation& activation,
                std::uint64_t seed) {
  if (widths.size() < 2) throw std::invalid_argument("gen_net: need at least two widths");
  for (Eigen::Index w : widths)
    if (w < 1) throw std::invalid_argument("gen_net: widths must be >= 1");
  validate_activation(activation);

  const int target = structural_suffix(widths);
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Layer> layers;
    for (size_t i = 0; i + 1 < widths.size(); ++i) {
      const Eigen::Index in = widths[i], out = widths[i + 1];
      const double scale = 1.0 / std::sqrt(static_cast<double>(in));
      Layer l;
      l.weights.resize(out, in);
      l.bias.resize(out);
      for (Eigen::Index r = 0; r < out; ++r) {
        for (Eigen::Index c = 0; c < in; ++c) l.weights(r, c) = scale * rng.uniform(-1.0, 1.0);
        l.bias(r) = scale * rng.uniform(-1.0, 1.0);
      }
      l.activation = activation;
      layers.push_back(std::move(l));
    }
    Network net(std::move(layers));
    if (find_open_suffix(net) == target) return net;
  }
  throw std::runtime_error("gen_net: no full-rank draw in 100 attempts");
}

}  // namespace setbound
