#pragma once

#include <setbound/network.hpp>

#include <cstdint>
#include <vector>

namespace setbound {

// Earliest layer index s such that widths are non-increasing from s to the
// end; the best open-map suffix the architecture can support.
int structural_suffix(const std::vector<Eigen::Index>& widths);

// Random network with the given widths (input plus one entry per layer) and
// a shared hidden/output activation. Weights and biases are uniform in
// [-1, 1] scaled by 1/sqrt(fan_in), redrawn until the structurally possible
// suffix is open-map certified (random matrices are almost surely full rank,
// so a redraw is rare). Deterministic for a given seed; throws after 100
// rejected draws.
Network gen_net(const std::vector<Eigen::Index>& widths, const Activation& activation,
                std::uint64_t seed);

}  // namespace setbound
