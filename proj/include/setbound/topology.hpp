#pragma once

#include <setbound/geometry.hpp>
#include <setbound/network.hpp>
#include <setbound/propagate.hpp>

#include <vector>

namespace setbound {

inline constexpr double kDefaultRankTol = 1e-9;

enum class HomeoVerdict { Verified, Inconclusive };

// Certify-or-abstain: Verified means the interval Jacobian determinant over
// the box excludes 0, so the network restricted to the box is injective with
// continuous inverse. A nonzero determinant is sufficient, not necessary,
// hence there is no "refuted" outcome.
struct HomeoCertificate {
  HomeoVerdict verdict = HomeoVerdict::Inconclusive;
  Intervald det_interval;
  Boxd box;
};

HomeoCertificate check_homeomorphism(const Network& net, const Boxd& x);

// Numerical rank: pivot count from Gaussian elimination with partial
// pivoting, counting pivots with magnitude > tol * max|W| * max(rows, cols).
int matrix_rank(const Eigen::MatrixXd& W, double tol = kDefaultRankTol);

enum class OpenMapVerdict { Verified, Refuted };

// Per-layer outcome of the structural open-map conditions: widths
// non-increasing, full-rank weights, strictly monotone continuous
// activation.
struct LayerFinding {
  int layer = 0;
  Eigen::Index in_dim = 0;
  Eigen::Index out_dim = 0;
  bool non_increasing = false;
  int rank = 0;
  int required_rank = 0;
  bool monotone_activation = false;

  bool ok() const { return non_increasing && rank == required_rank && monotone_activation; }
};

struct OpenMapCertificate {
  OpenMapVerdict verdict = OpenMapVerdict::Refuted;
  std::vector<LayerFinding> findings;
};

// A network whose layer widths are non-increasing, whose weight matrices
// all have full row rank, and whose activations are strictly monotone and
// continuous is an open map; open maps compose.
OpenMapCertificate check_open_map(const Network& net, double tol = kDefaultRankTol);

// Smallest s such that slice(s, last) passes check_open_map; layer_count()
// when no suffix qualifies.
int find_open_suffix(const Network& net, double tol = kDefaultRankTol);

// Grid classification for the subset-extraction pipeline: homeo_cells is the
// removable set A (certified homeomorphic, not touching the input boundary);
// kept_cells covers the closure of x \ A and is what gets propagated.
struct CellClassification {
  Boxd box;
  int k = 1;
  std::vector<long> homeo_cells;
  std::vector<long> kept_cells;

  long cell_count() const { return static_cast<long>(homeo_cells.size() + kept_cells.size()); }
  Boxd cell(long flat) const { return BoxGrid(box, k).cell(flat); }
};

CellClassification classify_cells(const Network& net, const Boxd& x, int k, int workers = 0);

}  // namespace setbound
