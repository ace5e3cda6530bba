#include <setbound/topology.hpp>

#include <setbound/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace setbound {

HomeoCertificate check_homeomorphism(const Network& net, const Boxd& x) {
  if (net.input_dim() != net.output_dim())
    throw std::invalid_argument("check_homeomorphism: network maps dimension " +
                                std::to_string(net.input_dim()) + " to " +
                                std::to_string(net.output_dim()) + "; must be square");
  HomeoCertificate cert;
  cert.box = x;
  cert.det_interval = interval_det(interval_jacobian(net, x));
  cert.verdict = cert.det_interval.contains(0.0) ? HomeoVerdict::Inconclusive
                                                 : HomeoVerdict::Verified;
  return cert;
}

int matrix_rank(const Eigen::MatrixXd& W, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("matrix_rank: tolerance must be positive");
  Eigen::MatrixXd m = W;
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0;
  const double threshold = tol * scale * static_cast<double>(std::max(m.rows(), m.cols()));
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    double best = std::abs(m(row, col));
    for (Eigen::Index r = row + 1; r < m.rows(); ++r) {
      if (std::abs(m(r, col)) > best) {
        best = std::abs(m(r, col));
        pivot = r;
      }
    }
    if (best <= threshold) continue;  // column has no usable pivot
    if (pivot != row) m.row(row).swap(m.row(pivot));
    for (Eigen::Index r = row + 1; r < m.rows(); ++r) {
      const double factor = m(r, col) / m(row, col);
      m.row(r).tail(m.cols() - col) -= factor * m.row(row).tail(m.cols() - col);
    }
    ++rank;
    ++row;
  }
  return rank;
}

OpenMapCertificate check_open_map(const Network& net, double tol) {
  OpenMapCertificate cert;
  bool all_ok = true;
  for (int i = 0; i < net.layer_count(); ++i) {
    const Layer& l = net.layer(i);
    LayerFinding f;
    f.layer = i;
    f.in_dim = l.in_dim();
    f.out_dim = l.out_dim();
    f.non_increasing = l.out_dim() <= l.in_dim();
    f.required_rank = static_cast<int>(l.out_dim());
    f.rank = matrix_rank(l.weights, tol);
    // Every supported activation kind is strictly monotone and continuous.
    f.monotone_activation = true;
    all_ok = all_ok && f.ok();
    cert.findings.push_back(f);
  }
  cert.verdict = all_ok ? OpenMapVerdict::Verified : OpenMapVerdict::Refuted;
  return cert;
}

int find_open_suffix(const Network& net, double tol) {
  // The conditions are per layer, so the verified suffixes are exactly the
  // tails of the last maximal run of good layers.
  int s = net.layer_count();
  for (int i = net.layer_count() - 1; i >= 0; --i) {
    const Layer& l = net.layer(i);
    const bool ok = l.out_dim() <= l.in_dim() &&
                    matrix_rank(l.weights, tol) == static_cast<int>(l.out_dim());
    if (!ok) break;
    s = i;
  }
  return s;
}

CellClassification classify_cells(const Network& net, const Boxd& x, int k, int workers) {
  if (net.input_dim() != net.output_dim())
    throw std::invalid_argument("classify_cells: network must be square");
  const BoxGrid grid(x, k);
  const long n = grid.cell_count();
  std::vector<char> is_homeo(static_cast<size_t>(n), 0);
  parallel_for(n, workers, [&](long i) {
    if (grid.touches_boundary(i)) return;  // Theorem: A must avoid the input boundary
    const HomeoCertificate cert = check_homeomorphism(net, grid.cell(i));
    is_homeo[static_cast<size_t>(i)] = cert.verdict == HomeoVerdict::Verified ? 1 : 0;
  });
  CellClassification out;
  out.box = x;
  out.k = k;
  for (long i = 0; i < n; ++i)
    (is_homeo[static_cast<size_t>(i)] ? out.homeo_cells : out.kept_cells).push_back(i);
  return out;
}

}  // namespace setbound
