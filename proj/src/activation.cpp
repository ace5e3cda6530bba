#include <setbound/activation.hpp>

#include <cmath>
#include <stdexcept>

namespace setbound {

namespace {

constexpr double kTranscendentalWidening = 1e-12;

double stable_sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

void validate_activation(const Activation& a) {
  switch (a.kind) {
    case ActKind::LeakyRelu:
      if (!(a.param > 0.0) || a.param == 1.0)
        throw std::invalid_argument("leaky_relu slope must be positive and != 1");
      break;
    case ActKind::Elu:
      if (!(a.param > 0.0)) throw std::invalid_argument("elu alpha must be positive");
      break;
    default:
      break;
  }
}

double act_value(const Activation& a, double x) {
  switch (a.kind) {
    case ActKind::Identity: return x;
    case ActKind::Tanh: return std::tanh(x);
    case ActKind::Sigmoid: return stable_sigmoid(x);
    case ActKind::LeakyRelu: return x >= 0.0 ? x : a.param * x;
    case ActKind::Elu: return x >= 0.0 ? x : a.param * std::expm1(x);
  }
  throw std::logic_error("unreachable activation kind");
}

double act_derivative(const Activation& a, double x) {
  switch (a.kind) {
    case ActKind::Identity: return 1.0;
    case ActKind::Tanh: {
      const double t = std::tanh(x);
      return 1.0 - t * t;
    }
    case ActKind::Sigmoid: {
      const double s = stable_sigmoid(x);
      return s * (1.0 - s);
    }
    case ActKind::LeakyRelu: return x >= 0.0 ? 1.0 : a.param;
    case ActKind::Elu: return x >= 0.0 ? 1.0 : a.param * std::exp(x);
  }
  throw std::logic_error("unreachable activation kind");
}

Intervald act_interval(const Activation& a, const Intervald& x) {
  if (a.kind == ActKind::Identity) return x;
  // All supported activations are increasing, so endpoint evaluation is tight.
  const Intervald image(act_value(a, x.lo()), act_value(a, x.hi()));
  return widen_relative(image, kTranscendentalWidening);
}

Intervald act_deriv_interval(const Activation& a, const Intervald& x) {
  switch (a.kind) {
    case ActKind::Identity:
      return Intervald(1.0, 1.0);
    case ActKind::Tanh:
    case ActKind::Sigmoid: {
      const double dlo = act_derivative(a, x.lo());
      const double dhi = act_derivative(a, x.hi());
      const double peak = a.kind == ActKind::Tanh ? 1.0 : 0.25;
      const double max = x.contains(0.0) ? peak : std::max(dlo, dhi);
      return widen_relative(Intervald(std::min(dlo, dhi), max), kTranscendentalWidening);
    }
    case ActKind::LeakyRelu: {
      if (x.lo() >= 0.0) return Intervald(1.0, 1.0);
      if (x.hi() < 0.0) return Intervald(a.param, a.param);
      return Intervald(std::min(a.param, 1.0), std::max(a.param, 1.0));
    }
    case ActKind::Elu: {
      if (x.lo() >= 0.0) return Intervald(1.0, 1.0);
      const double dlo = a.param * std::exp(x.lo());
      if (x.hi() < 0.0) {
        const double dhi = a.param * std::exp(x.hi());
        return widen_relative(Intervald(dlo, dhi), kTranscendentalWidening);
      }
      // Kink inside: hull of (alpha e^lo, alpha) from the left and {1} from
      // the right.
      return widen_relative(Intervald(std::min(dlo, 1.0), std::max(a.param, 1.0)),
                            kTranscendentalWidening);
    }
  }
  throw std::logic_error("unreachable activation kind");
}

std::string act_name(const Activation& a) {
  switch (a.kind) {
    case ActKind::Identity: return "identity";
    case ActKind::Tanh: return "tanh";
    case ActKind::Sigmoid: return "sigmoid";
    case ActKind::LeakyRelu: return "leaky_relu";
    case ActKind::Elu: return "elu";
  }
  throw std::logic_error("unreachable activation kind");
}

Activation act_from_name(const std::string& name, std::optional<double> param) {
  Activation a;
  if (name == "identity" || name == "purelin") {
    a = Activation::identity();
  } else if (name == "tanh") {
    a = Activation::tanh();
  } else if (name == "sigmoid") {
    a = Activation::sigmoid();
  } else if (name == "leaky_relu") {
    if (!param) throw std::invalid_argument("leaky_relu requires a slope parameter");
    a = Activation::leaky_relu(*param);
  } else if (name == "elu") {
    if (!param) throw std::invalid_argument("elu requires an alpha parameter");
    a = Activation::elu(*param);
  } else {
    throw std::invalid_argument("unknown activation '" + name + "'");
  }
  validate_activation(a);
  return a;
}

Boxd act_box(const Activation& a, const Boxd& x) {
  Boxd out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out(i) = act_interval(a, x(i));
  return out;
}

}  // namespace setbound
