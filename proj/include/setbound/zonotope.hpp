#pragma once

#include <setbound/interval.hpp>
#include <setbound/network.hpp>

namespace setbound {

// Zonotope {c + G eps : eps in [-1,1]^g}. The second propagation engine,
// exact under affine maps and closed under the sigmoid/tanh transformer.
struct Zonotope {
  Eigen::VectorXd center;
  Eigen::MatrixXd generators;  // d x g, g >= 0

  Eigen::Index dim() const { return center.size(); }
  Eigen::Index generator_count() const { return generators.cols(); }
};

// Center at the midpoints, one axis-aligned generator per non-degenerate
// dimension.
Zonotope from_box(const Boxd& x);

// Exact affine image {W z + b}.
Zonotope zono_affine(const Zonotope& z, const Eigen::MatrixXd& W, const Eigen::VectorXd& b);

// Minimal-area parallelogram transformer for Sigmoid/Tanh: per dimension
// with concretization [l, u], slope lambda = min(act'(l), act'(u)), offset
// interval mu +- delta, one fresh generator carrying delta. Identity is a
// no-op; other activations are unsupported by this engine.
Zonotope zono_activation(const Zonotope& z, const Activation& a);

// Componentwise c_i +- sum_j |G_ij|, accumulated with outward rounding.
Boxd interval_hull(const Zonotope& z);

struct ZonoResult {
  Boxd hull;
  Zonotope zonotope;
};

// Layer-by-layer propagation of a box through the network.
ZonoResult zono_forward(const Network& net, const Boxd& x);

}  // namespace setbound
