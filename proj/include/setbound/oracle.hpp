#pragma once

#include <setbound/geometry.hpp>
#include <setbound/network.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace setbound {

// SplitMix64: tiny, fully specified, and splittable into independent streams
// by hashing the stream index into the seed. Reports record the algorithm
// name so results stay reproducible across platforms.
inline constexpr const char* kRngAlgorithm = "splitmix64";

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Child generator for stream index i; disjoint streams for parallel use.
  SplitMix64 split(std::uint64_t i) const {
    SplitMix64 mix(state_ ^ (0xA3EC647659359ACDull * (i + 1)));
    return SplitMix64(mix.next());
  }

 private:
  std::uint64_t state_;
};

// Deterministic Monte-Carlo estimate of the reachable set: uniform samples
// from the box, forward-evaluated, with the exact componentwise hull of the
// outputs. Test/benchmark machinery; never used by certificates.
struct SampleCloud {
  std::uint64_t seed = 0;
  long count = 0;
  Eigen::MatrixXd inputs;   // count x input_dim
  Eigen::MatrixXd outputs;  // count x output_dim
  Boxd output_hull;
};

SampleCloud mc_reach(const Network& net, const Boxd& x, long n, std::uint64_t seed,
                     int workers = 0);

// Exact chain-rule Jacobian at a point.
Eigen::MatrixXd point_jacobian(const Network& net, const Eigen::VectorXd& x);

// First sampled input (by sample index) whose output violates the safe set,
// or nullopt. Same sampling discipline as mc_reach.
std::optional<Eigen::VectorXd> falsify(const Network& net, const Boxd& x, const SafeSet& s,
                                       long n, std::uint64_t seed, int workers = 0);

// CSV with one row per sample: inputs then outputs.
std::string sample_cloud_csv(const SampleCloud& cloud);

}  // namespace setbound
