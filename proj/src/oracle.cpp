#include <setbound/oracle.hpp>

#include <setbound/parallel.hpp>

#include <atomic>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace setbound {

namespace {

// Fixed-size sample blocks, each drawn from its own child stream, keep the
// sample sequence independent of the worker count.
constexpr long kBlock = 4096;

Eigen::VectorXd draw(SplitMix64& rng, const Boxd& box) {
  Eigen::VectorXd p(box.size());
  for (Eigen::Index d = 0; d < box.size(); ++d) p(d) = rng.uniform(box(d).lo(), box(d).hi());
  return p;
}

}  // namespace

SampleCloud mc_reach(const Network& net, const Boxd& x, long n, std::uint64_t seed, int workers) {
  if (n < 1) throw std::invalid_argument("mc_reach: sample count must be >= 1");
  if (x.size() != net.input_dim())
    throw std::invalid_argument("mc_reach: box dimension does not match network input");
  SampleCloud cloud;
  cloud.seed = seed;
  cloud.count = n;
  cloud.inputs.resize(n, net.input_dim());
  cloud.outputs.resize(n, net.output_dim());
  const SplitMix64 root(seed);
  const long blocks = (n + kBlock - 1) / kBlock;
  parallel_for(blocks, workers, [&](long blk) {
    SplitMix64 rng = root.split(static_cast<std::uint64_t>(blk));
    const long end = std::min(n, (blk + 1) * kBlock);
    for (long i = blk * kBlock; i < end; ++i) {
      const Eigen::VectorXd p = draw(rng, x);
      cloud.inputs.row(i) = p.transpose();
      cloud.outputs.row(i) = net.forward(p).transpose();
    }
  });
  Eigen::VectorXd lo = cloud.outputs.colwise().minCoeff().transpose();
  Eigen::VectorXd hi = cloud.outputs.colwise().maxCoeff().transpose();
  cloud.output_hull = make_box(lo, hi);
  return cloud;
}

Eigen::MatrixXd point_jacobian(const Network& net, const Eigen::VectorXd& x) {
  if (x.size() != net.input_dim())
    throw std::invalid_argument("point_jacobian: input dimension mismatch");
  Eigen::VectorXd v = x;
  Eigen::MatrixXd jac = Eigen::MatrixXd::Identity(net.input_dim(), net.input_dim());
  for (const Layer& l : net.layers()) {
    const Eigen::VectorXd pre = l.weights * v + l.bias;
    jac = (l.weights * jac).eval();
    for (Eigen::Index r = 0; r < jac.rows(); ++r)
      jac.row(r) *= act_derivative(l.activation, pre(r));
    v.resize(pre.size());
    for (Eigen::Index i = 0; i < pre.size(); ++i) v(i) = act_value(l.activation, pre(i));
  }
  return jac;
}

std::optional<Eigen::VectorXd> falsify(const Network& net, const Boxd& x, const SafeSet& s,
                                       long n, std::uint64_t seed, int workers) {
  if (n < 1) throw std::invalid_argument("falsify: sample count must be >= 1");
  const SplitMix64 root(seed);
  const long blocks = (n + kBlock - 1) / kBlock;
  std::atomic<long> first{std::numeric_limits<long>::max()};
  std::vector<Eigen::VectorXd> witness(static_cast<size_t>(blocks));
  std::vector<long> witness_index(static_cast<size_t>(blocks), -1);
  parallel_for(blocks, workers, [&](long blk) {
    if (blk * kBlock > first.load()) return;  // a strictly earlier block already hit
    SplitMix64 rng = root.split(static_cast<std::uint64_t>(blk));
    const long end = std::min(n, (blk + 1) * kBlock);
    for (long i = blk * kBlock; i < end; ++i) {
      const Eigen::VectorXd p = draw(rng, x);
      const Eigen::VectorXd out = net.forward(p);
      if (!contained_in_safe(make_box(out), s)) {
        witness[static_cast<size_t>(blk)] = p;
        witness_index[static_cast<size_t>(blk)] = i;
        long cur = first.load();
        while (i < cur && !first.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  });
  if (first.load() == std::numeric_limits<long>::max()) return std::nullopt;
  // Deterministic result: the block holding the smallest violating index.
  for (long blk = 0; blk < blocks; ++blk)
    if (witness_index[static_cast<size_t>(blk)] == first.load())
      return witness[static_cast<size_t>(blk)];
  return std::nullopt;
}

std::string sample_cloud_csv(const SampleCloud& cloud) {
  std::ostringstream out;
  out.precision(17);
  for (Eigen::Index c = 0; c < cloud.inputs.cols(); ++c) out << "x" << c << ",";
  for (Eigen::Index c = 0; c < cloud.outputs.cols(); ++c)
    out << "y" << c << (c + 1 == cloud.outputs.cols() ? "" : ",");
  out << "\n";
  for (long i = 0; i < cloud.count; ++i) {
    for (Eigen::Index c = 0; c < cloud.inputs.cols(); ++c) out << cloud.inputs(i, c) << ",";
    for (Eigen::Index c = 0; c < cloud.outputs.cols(); ++c)
      out << cloud.outputs(i, c) << (c + 1 == cloud.outputs.cols() ? "" : ",");
    out << "\n";
  }
  return out.str();
}

}  // namespace setbound
