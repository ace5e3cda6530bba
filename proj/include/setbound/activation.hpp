#pragma once

#include <setbound/interval.hpp>

#include <optional>
#include <string>

namespace setbound {

// Activation functions supported by the library. All of them are strictly
// increasing and continuous on the whole real line, which is what the
// open-map certificates rely on. ReLU is deliberately absent: it is neither
// strictly monotone nor differentiable.
enum class ActKind { Identity, Tanh, Sigmoid, LeakyRelu, Elu };

struct Activation {
  ActKind kind = ActKind::Identity;
  double param = 0.0;  // LeakyRelu slope or Elu alpha; unused otherwise

  static Activation identity() { return {ActKind::Identity, 0.0}; }
  static Activation tanh() { return {ActKind::Tanh, 0.0}; }
  static Activation sigmoid() { return {ActKind::Sigmoid, 0.0}; }
  static Activation leaky_relu(double slope) { return {ActKind::LeakyRelu, slope}; }
  static Activation elu(double alpha) { return {ActKind::Elu, alpha}; }

  bool operator==(const Activation&) const = default;
};

// Throws std::invalid_argument for out-of-range parameters
// (LeakyRelu slope must be positive and != 1, Elu alpha positive).
void validate_activation(const Activation& a);

double act_value(const Activation& a, double x);

// Pointwise derivative; the kinks of LeakyRelu/Elu at 0 take the right
// derivative (= 1 for both).
double act_derivative(const Activation& a, double x);

// Tight monotone image [act(lo), act(hi)], widened outward by a relative
// 1e-12 to absorb libm rounding.
Intervald act_interval(const Activation& a, const Intervald& x);

// Sound enclosure of {act'(t) : t in x}. Tanh/Sigmoid exploit that the
// derivative peaks at 0 and decays with |x|; LeakyRelu/Elu across the kink
// return the hull of both one-sided derivative ranges.
Intervald act_deriv_interval(const Activation& a, const Intervald& x);

std::string act_name(const Activation& a);

// Parses "identity" | "tanh" | "sigmoid" | "leaky_relu" | "elu"; the last two
// require a parameter. Throws std::invalid_argument on unknown names.
Activation act_from_name(const std::string& name, std::optional<double> param = std::nullopt);

Boxd act_box(const Activation& a, const Boxd& x);

}  // namespace setbound
