#pragma once

#include <setbound/geometry.hpp>
#include <setbound/network.hpp>
#include <setbound/topology.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace setbound {

enum class Engine { Ibp, Zonotope };

std::string engine_name(Engine e);

enum class Verdict { Safe, Unknown };

// Thrown when a pipeline's certificate precondition fails (homeomorphism not
// certified, or no open-map suffix); callers fall back to another method.
struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyConfig {
  Engine engine = Engine::Ibp;
  int max_rounds = 8;
  // Partition resolution per 1-based round; defaults to k = round, matching
  // the refinement protocol of the experiments.
  std::function<int(int)> schedule;
  // Initial grid for the subset pipeline; doubled together with the reach
  // partition on every refinement round.
  int homeo_grid = 4;
  double rank_tol = kDefaultRankTol;
  int workers = 0;  // 0 = machine parallelism

  int schedule_k(int round) const { return schedule ? schedule(round) : round; }
};

struct RoundRecord {
  int round = 0;
  int k = 1;
  long cells = 0;
  long homeo_cells = 0;  // subset pipeline only
  Boxd hull;
  bool contained = false;
  double seconds = 0.0;
};

struct Report {
  Verdict verdict = Verdict::Unknown;
  std::string method;  // "boundary" | "entire" | "subset" | "openmap"
  Engine engine = Engine::Ibp;
  Boxd input;
  std::optional<SafeSet> safe;
  std::vector<RoundRecord> rounds;
  Boxd final_hull;
  std::optional<HomeoCertificate> homeo;
  std::optional<OpenMapCertificate> open_map;
  int open_suffix = -1;          // first layer of the certified suffix
  std::optional<Boxd> prefix_hull;  // openmap: enclosure entering the suffix
};

// Union hull of per-cell engine outputs, evaluated on a worker pool.
Boxd reach(const Network& net, Engine engine, const std::vector<Boxd>& cells, int workers = 0);

// Entire-set baseline: propagate a k-grid partition of the input box.
Report verify_entire(const Network& net, const Boxd& x, const std::optional<SafeSet>& safe,
                     const VerifyConfig& cfg = {});

// Boundary pipeline for invertible networks: requires a homeomorphism
// certificate over x, then propagates only partitions of the boundary faces.
// Throws CertificateError when the certificate is Inconclusive.
Report verify_invertible(const Network& net, const Boxd& x, const std::optional<SafeSet>& safe,
                         const VerifyConfig& cfg = {});

// Subset-extraction pipeline for non-invertible square networks: removes
// grid cells certified homeomorphic in the interior and propagates the rest.
Report verify_noninvertible(const Network& net, const Boxd& x, const std::optional<SafeSet>& safe,
                            const VerifyConfig& cfg = {});

// Open-map pipeline: propagate the whole set through the largest non-open
// prefix, then only the boundary faces of the intermediate hull through the
// certified open suffix. Throws CertificateError when no suffix qualifies.
Report verify_openmap(const Network& net, const Boxd& x, const std::optional<SafeSet>& safe,
                      const VerifyConfig& cfg = {});

// Boundary method selection used by `compare` and the CLI's method=auto:
// homeomorphism certificate -> boundary; else open suffix -> openmap; else
// subset extraction.
Report verify_auto(const Network& net, const Boxd& x, const std::optional<SafeSet>& safe,
                   const VerifyConfig& cfg = {});

struct CompareResult {
  Report entire;
  Report boundary;
  Eigen::VectorXd ratios;  // per-dimension boundary width / entire width
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
};

// Single-round entire-set vs boundary-method comparison (the ratio
// methodology of the experiments' tables).
CompareResult compare(const Network& net, const Boxd& x, const std::optional<SafeSet>& safe,
                      const VerifyConfig& cfg = {});

}  // namespace setbound
