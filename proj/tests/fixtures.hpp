#pragma once

#include <setbound/interval.hpp>
#include <setbound/network.hpp>

// Shared test networks. exm47_network is the published 2-4-3-2
// sigmoid/identity network used throughout the reachability tests; the
// reference values frozen in the tests were recomputed independently before
// this library was written.

namespace fixtures {

inline setbound::Network exm47_network() {
  Eigen::MatrixXd w1(4, 2);
  w1 << -0.3143, -1.2349,
         0.6374,  0.0476,
         0.5337,  0.9933,
         0.1006, -0.3207;
  Eigen::VectorXd b1(4);
  b1 << 0.9499, 0.7459, 1.8229, -0.7684;

  Eigen::MatrixXd w2(3, 4);
  w2 <<  0.7289, -0.8494,  1.0250, -1.2558,
         1.4836, -1.2679,  1.8014, -0.8406,
        -0.0152,  1.8449,  0.6851, -1.7672;
  Eigen::VectorXd b2(3);
  b2 << -1.8237, -0.8818, -1.3181;

  Eigen::MatrixXd w3(2, 3);
  w3 << 0.7084, -0.5921,  1.1720,
        1.6097, -1.5994, -0.1263;
  Eigen::VectorXd b3(2);
  b3 << 0.7494, 0.7323;

  using setbound::Activation;
  return setbound::Network({{w1, b1, Activation::sigmoid()},
                            {w2, b2, Activation::sigmoid()},
                            {w3, b3, Activation::identity()}});
}

inline setbound::Network identity_network(int dim) {
  setbound::Layer l;
  l.weights = Eigen::MatrixXd::Identity(dim, dim);
  l.bias = Eigen::VectorXd::Zero(dim);
  l.activation = setbound::Activation::identity();
  return setbound::Network({l});
}

inline setbound::Network single_layer(const Eigen::MatrixXd& w, const Eigen::VectorXd& b,
                                      const setbound::Activation& act) {
  return setbound::Network({{w, b, act}});
}

inline setbound::Boxd square_box(double lo, double hi, int dim) {
  return setbound::make_box(Eigen::VectorXd::Constant(dim, lo),
                            Eigen::VectorXd::Constant(dim, hi));
}

inline bool approx_box(const setbound::Boxd& a, const setbound::Boxd& b, double tol) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (std::abs(a(i).lo() - b(i).lo()) > tol || std::abs(a(i).hi() - b(i).hi()) > tol)
      return false;
  return true;
}

}  // namespace fixtures
