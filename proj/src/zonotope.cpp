#include <setbound/zonotope.hpp>

#include <cmath>
#include <stdexcept>

namespace setbound {

Zonotope from_box(const Boxd& x) {
  if (x.size() == 0) throw std::invalid_argument("from_box: empty box");
  Zonotope z;
  z.center = midpoint(x);
  const Eigen::VectorXd r = radii(x);
  const Eigen::Index g = count_nondegenerate(x);
  z.generators = Eigen::MatrixXd::Zero(x.size(), g);
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (r(i) > 0.0) z.generators(i, col++) = r(i);
  return z;
}

Zonotope zono_affine(const Zonotope& z, const Eigen::MatrixXd& W, const Eigen::VectorXd& b) {
  if (W.cols() != z.dim())
    throw std::invalid_argument("zono_affine: weight columns do not match zonotope dimension");
  return Zonotope{W * z.center + b, W * z.generators};
}

namespace {

// Slack added to the fresh generator so that float rounding in the
// transformer cannot break containment of true activation images.
double rounding_slack(double lambda, double mu, double l, double u) {
  return 1e-12 * (1.0 + std::abs(mu) + std::abs(lambda) * std::max(std::abs(l), std::abs(u)));
}

}  // namespace

Zonotope zono_activation(const Zonotope& z, const Activation& a) {
  if (a.kind == ActKind::Identity) return z;
  if (a.kind != ActKind::Sigmoid && a.kind != ActKind::Tanh)
    throw std::invalid_argument("zonotope engine does not support activation '" + act_name(a) +
                                "'");
  const Eigen::Index d = z.dim();
  Zonotope out;
  out.center.resize(d);
  // One fresh generator per non-degenerate dimension, appended after the
  // lambda-scaled existing ones.
  Eigen::VectorXd fresh = Eigen::VectorXd::Zero(d);
  out.generators = z.generators;
  for (Eigen::Index i = 0; i < d; ++i) {
    const double r = z.generators.row(i).cwiseAbs().sum();
    const double c = z.center(i);
    if (r == 0.0) {
      out.center(i) = act_value(a, c);
      continue;
    }
    const double l = c - r, u = c + r;
    const double lambda = std::min(act_derivative(a, l), act_derivative(a, u));
    const double sl = act_value(a, l), su = act_value(a, u);
    const double mu = 0.5 * (su + sl - lambda * (u + l));
    const double delta = 0.5 * (su - sl - lambda * (u - l));
    out.center(i) = lambda * c + mu;
    out.generators.row(i) *= lambda;
    fresh(i) = delta + rounding_slack(lambda, mu, l, u);
  }
  const Eigen::Index extra = (fresh.array() != 0.0).count();
  if (extra > 0) {
    out.generators.conservativeResize(Eigen::NoChange, z.generator_count() + extra);
    Eigen::Index col = z.generator_count();
    for (Eigen::Index i = 0; i < d; ++i) {
      if (fresh(i) == 0.0) continue;
      out.generators.col(col).setZero();
      out.generators(i, col++) = fresh(i);
    }
  }
  return out;
}

Boxd interval_hull(const Zonotope& z) {
  Boxd out(z.dim());
  for (Eigen::Index i = 0; i < z.dim(); ++i) {
    double r = 0.0;
    for (Eigen::Index j = 0; j < z.generator_count(); ++j)
      r = detail::next_up(r + std::abs(z.generators(i, j)));
    out(i) = Intervald(detail::next_down(z.center(i) - r), detail::next_up(z.center(i) + r));
  }
  return out;
}

ZonoResult zono_forward(const Network& net, const Boxd& x) {
  if (x.size() != net.input_dim())
    throw std::invalid_argument("zono_forward: box dimension does not match network input");
  Zonotope z = from_box(x);
  for (const Layer& l : net.layers()) {
    z = zono_affine(z, l.weights, l.bias);
    z = zono_activation(z, l.activation);
  }
  return ZonoResult{interval_hull(z), std::move(z)};
}

}  // namespace setbound
