#include <setbound/propagate.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace setbound {

Boxd affine_image(const Eigen::MatrixXd& W, const Eigen::VectorXd& b, const Boxd& x) {
  if (W.cols() != x.size())
    throw std::invalid_argument("affine_image: " + std::to_string(W.cols()) +
                                " weight columns vs box dimension " + std::to_string(x.size()));
  Boxd out(W.rows());
  for (Eigen::Index r = 0; r < W.rows(); ++r) {
    Intervald acc(b(r));
    for (Eigen::Index c = 0; c < W.cols(); ++c) acc += Intervald(W(r, c)) * x(c);
    out(r) = acc;
  }
  return out;
}

IbpResult ibp_forward(const Network& net, const Boxd& x) {
  if (x.size() != net.input_dim())
    throw std::invalid_argument("ibp_forward: box dimension " + std::to_string(x.size()) +
                                " does not match network input " +
                                std::to_string(net.input_dim()));
  IbpResult res;
  Boxd v = x;
  for (const Layer& l : net.layers()) {
    Boxd pre = affine_image(l.weights, l.bias, v);
    v = act_box(l.activation, pre);
    res.bounds.pre_activation.push_back(std::move(pre));
    res.bounds.post_activation.push_back(v);
  }
  res.output = v;
  return res;
}

IntervalMatrixd to_interval_matrix(const Eigen::MatrixXd& m) {
  IntervalMatrixd out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = Intervald(m(r, c));
  return out;
}

IntervalMatrixd imat_mul(const IntervalMatrixd& a, const IntervalMatrixd& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("imat_mul: inner dimensions differ");
  IntervalMatrixd out(a.rows(), b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < b.cols(); ++c) {
      Intervald acc(0.0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(r, k) * b(k, c);
      out(r, c) = acc;
    }
  }
  return out;
}

IntervalMatrixd interval_jacobian(const Network& net, const Boxd& x) {
  const IbpResult ibp = ibp_forward(net, x);
  IntervalMatrixd jac;
  for (int i = 0; i < net.layer_count(); ++i) {
    const Layer& l = net.layer(i);
    jac = i == 0 ? to_interval_matrix(l.weights)
                 : imat_mul(to_interval_matrix(l.weights), jac);
    const Boxd& pre = ibp.bounds.pre_activation[static_cast<size_t>(i)];
    // Scale row r by the derivative enclosure of unit r; diagonal product.
    for (Eigen::Index r = 0; r < jac.rows(); ++r) {
      const Intervald d = act_deriv_interval(l.activation, pre(r));
      for (Eigen::Index c = 0; c < jac.cols(); ++c) jac(r, c) = d * jac(r, c);
    }
  }
  return jac;
}

namespace {

Intervald cofactor_det(const IntervalMatrixd& m) {
  const Eigen::Index n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Intervald det(0.0);
  double sign = 1.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    IntervalMatrixd minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index mc = 0;
      for (Eigen::Index cc = 0; cc < n; ++cc) {
        if (cc == c) continue;
        minor(r - 1, mc++) = m(r, cc);
      }
    }
    det += Intervald(sign) * m(0, c) * cofactor_det(minor);
    sign = -sign;
  }
  return det;
}

// Upper bound on |det| of an interval matrix via Hadamard's inequality,
// evaluated with upward rounding on the entry magnitudes.
double hadamard_bound(const IntervalMatrixd& m, Eigen::Index from) {
  double bound = 1.0;
  for (Eigen::Index r = from; r < m.rows(); ++r) {
    double sq = 0.0;
    for (Eigen::Index c = from; c < m.cols(); ++c) {
      const double mag = m(r, c).mag();
      sq = detail::next_up(sq + detail::next_up(mag * mag));
    }
    bound = detail::next_up(bound * detail::next_up(std::sqrt(sq)));
  }
  return bound;
}

Intervald elimination_det(IntervalMatrixd m) {
  const Eigen::Index n = m.rows();
  Intervald det(1.0);
  for (Eigen::Index k = 0; k < n; ++k) {
    // Mignitude pivoting: the row whose pivot candidate is farthest from 0.
    Eigen::Index pivot = k;
    double best = m(k, k).mig();
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (m(r, k).mig() > best) {
        best = m(r, k).mig();
        pivot = r;
      }
    }
    if (best == 0.0) {
      // Every candidate contains 0: elimination cannot continue soundly.
      // Fall back to a Hadamard bound on the remaining block, which yields
      // a zero-containing enclosure.
      const double h = hadamard_bound(m, k);
      return det * Intervald(-h, h);
    }
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      det = -det;
    }
    det *= m(k, k);
    for (Eigen::Index r = k + 1; r < n; ++r) {
      const Intervald factor = m(r, k) / m(k, k);
      for (Eigen::Index c = k + 1; c < n; ++c) m(r, c) -= factor * m(k, c);
      m(r, k) = Intervald(0.0);
    }
  }
  return det;
}

}  // namespace

Intervald interval_det(const IntervalMatrixd& J) {
  if (J.rows() != J.cols()) throw std::invalid_argument("interval_det: matrix is not square");
  const Eigen::Index n = J.rows();
  if (n == 0) throw std::invalid_argument("interval_det: empty matrix");
  if (n > kMaxDetDim)
    throw std::invalid_argument("interval_det: dimension " + std::to_string(n) +
                                " exceeds supported maximum " + std::to_string(kMaxDetDim));
  return n <= 4 ? cofactor_det(J) : elimination_det(J);
}

}  // namespace setbound
