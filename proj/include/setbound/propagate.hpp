#pragma once

#include <setbound/interval.hpp>
#include <setbound/network.hpp>

#include <vector>

namespace setbound {

// Per-layer interval bounds recorded during ibp_forward; post is the
// activation image of pre. Needed to build interval Jacobians.
struct LayerBounds {
  std::vector<Boxd> pre_activation;
  std::vector<Boxd> post_activation;
};

struct IbpResult {
  Boxd output;
  LayerBounds bounds;
};

// Sound enclosure of {W x + b : x in box}, computed row-wise with one-ulp
// outward rounding per elementary operation.
Boxd affine_image(const Eigen::MatrixXd& W, const Eigen::VectorXd& b, const Boxd& x);

// Interval bound propagation layer by layer: the natural interval extension
// of the network. Output encloses the reachable set of x.
IbpResult ibp_forward(const Network& net, const Boxd& x);

// Interval matrix product with pointwise outward rounding.
IntervalMatrixd imat_mul(const IntervalMatrixd& a, const IntervalMatrixd& b);
IntervalMatrixd to_interval_matrix(const Eigen::MatrixXd& m);

// Enclosure of every Jacobian dN/dx over the box: the chain-rule product
// D_l W_l ... D_1 W_1 where D_i is the diagonal of activation-derivative
// intervals over the layer-i pre-activation bounds from plain IBP.
IntervalMatrixd interval_jacobian(const Network& net, const Boxd& x);

// Interval containing det(M) for every point matrix M in J. Cofactor
// expansion up to 4x4; interval Gaussian elimination with mignitude pivoting
// for 5..8. Larger sizes throw (interval determinants are vacuous there).
Intervald interval_det(const IntervalMatrixd& J);

inline constexpr int kMaxDetDim = 8;

}  // namespace setbound
