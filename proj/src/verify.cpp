#include <setbound/verify.hpp>

#include <setbound/parallel.hpp>
#include <setbound/propagate.hpp>
#include <setbound/zonotope.hpp>

#include <chrono>
#include <cmath>
#include <limits>

namespace setbound {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Boxd engine_hull(const Network& net, Engine engine, const Boxd& cell) {
  return engine == Engine::Ibp ? ibp_forward(net, cell).output : zono_forward(net, cell).hull;
}

bool safe_contains(const Boxd& hull, const std::optional<SafeSet>& safe) {
  return safe.has_value() && contained_in_safe(hull, *safe);
}

// Shared round loop: computes the hull of `cells(k)` per round, intersects
// with the previous round's hull (both enclose the same set, so the meet is
// still sound and refinement is monotone by construction), and stops at
// containment.
void run_rounds(Report& report, const Network& net, const std::optional<SafeSet>& safe,
                const VerifyConfig& cfg,
                const std::function<std::vector<Boxd>(int)>& cells_for_k) {
  if (cfg.max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
  Boxd hull;
  for (int round = 1; round <= cfg.max_rounds; ++round) {
    const auto start = Clock::now();
    const int k = cfg.schedule_k(round);
    const std::vector<Boxd> cells = cells_for_k(k);
    Boxd raw = reach(net, report.engine, cells, cfg.workers);
    hull = round == 1 ? raw : box_meet(hull, raw);
    RoundRecord rec;
    rec.round = round;
    rec.k = k;
    rec.cells = static_cast<long>(cells.size());
    rec.hull = hull;
    rec.contained = safe_contains(hull, safe);
    rec.seconds = seconds_since(start);
    report.rounds.push_back(rec);
    if (rec.contained) {
      report.verdict = Verdict::Safe;
      break;
    }
  }
  report.final_hull = report.rounds.back().hull;
}

Report make_report(std::string method, const Network&, const Boxd& x,
                   const std::optional<SafeSet>& safe, const VerifyConfig& cfg) {
  Report r;
  r.method = std::move(method);
  r.engine = cfg.engine;
  r.input = x;
  r.safe = safe;
  return r;
}

}  // namespace

std::string engine_name(Engine e) { return e == Engine::Ibp ? "ibp" : "zono"; }

Boxd reach(const Network& net, Engine engine, const std::vector<Boxd>& cells, int workers) {
  if (cells.empty()) throw std::invalid_argument("reach: no cells to propagate");
  std::vector<Boxd> hulls(cells.size());
  parallel_for(static_cast<long>(cells.size()), workers,
               [&](long i) { hulls[static_cast<size_t>(i)] = engine_hull(net, engine, cells[static_cast<size_t>(i)]); });
  Boxd out = hulls.front();
  for (size_t i = 1; i < hulls.size(); ++i) out = box_hull(out, hulls[i]);
  return out;
}

Report verify_entire(const Network& net, const Boxd& x, const std::optional<SafeSet>& safe,
                     const VerifyConfig& cfg) {
  Report report = make_report("entire", net, x, safe, cfg);
  run_rounds(report, net, safe, cfg, [&](int k) { return partition_box(x, k); });
  return report;
}

Report verify_invertible(const Network& net, const Boxd& x, const std::optional<SafeSet>& safe,
                         const VerifyConfig& cfg) {
  Report report = make_report("boundary", net, x, safe, cfg);
  report.homeo = check_homeomorphism(net, x);
  if (report.homeo->verdict != HomeoVerdict::Verified)
    throw CertificateError(
        "homeomorphism certificate is inconclusive over the input box; "
        "use the subset or open-map pipeline");
  const FaceSet fs = faces(x);
  run_rounds(report, net, safe, cfg, [&](int k) { return partition_faces(fs, k); });
  return report;
}

Report verify_noninvertible(const Network& net, const Boxd& x, const std::optional<SafeSet>& safe,
                            const VerifyConfig& cfg) {
  Report report = make_report("subset", net, x, safe, cfg);
  if (cfg.max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
  Boxd hull;
  int grid_k = cfg.homeo_grid;
  for (int round = 1; round <= cfg.max_rounds; ++round, grid_k *= 2) {
    const auto start = Clock::now();
    const CellClassification cls = classify_cells(net, x, grid_k, cfg.workers);
    std::vector<Boxd> cells;
    cells.reserve(cls.kept_cells.size());
    const BoxGrid grid(x, grid_k);
    for (long idx : cls.kept_cells) cells.push_back(grid.cell(idx));
    Boxd raw = reach(net, report.engine, cells, cfg.workers);
    // Doubling keeps grids nested, so kept regions shrink and the meet with
    // the previous hull remains a sound enclosure of the current kept set.
    hull = round == 1 ? raw : box_meet(hull, raw);
    RoundRecord rec;
    rec.round = round;
    rec.k = grid_k;
    rec.cells = static_cast<long>(cls.kept_cells.size());
    rec.homeo_cells = static_cast<long>(cls.homeo_cells.size());
    rec.hull = hull;
    rec.contained = safe_contains(hull, safe);
    rec.seconds = seconds_since(start);
    report.rounds.push_back(rec);
    if (rec.contained) {
      report.verdict = Verdict::Safe;
      break;
    }
  }
  report.final_hull = report.rounds.back().hull;
  return report;
}

Report verify_openmap(const Network& net, const Boxd& x, const std::optional<SafeSet>& safe,
                      const VerifyConfig& cfg) {
  Report report = make_report("openmap", net, x, safe, cfg);
  const int s = find_open_suffix(net, cfg.rank_tol);
  if (s >= net.layer_count())
    throw CertificateError("no open-map suffix: widths increase or a weight matrix is rank "
                           "deficient in every tail");
  report.open_suffix = s;
  const Network suffix = net.slice(s, net.layer_count() - 1);
  report.open_map = check_open_map(suffix, cfg.rank_tol);
  const Boxd intermediate = s == 0 ? x : engine_hull(net.slice(0, s - 1), cfg.engine, x);
  report.prefix_hull = intermediate;
  const FaceSet fs = faces(intermediate);
  run_rounds(report, suffix, safe, cfg, [&](int k) { return partition_faces(fs, k); });
  return report;
}

Report verify_auto(const Network& net, const Boxd& x, const std::optional<SafeSet>& safe,
                   const VerifyConfig& cfg) {
  if (net.input_dim() == net.output_dim() && net.input_dim() <= kMaxDetDim) {
    try {
      return verify_invertible(net, x, safe, cfg);
    } catch (const CertificateError&) {
    }
  }
  try {
    return verify_openmap(net, x, safe, cfg);
  } catch (const CertificateError&) {
  }
  return verify_noninvertible(net, x, safe, cfg);
}

CompareResult compare(const Network& net, const Boxd& x, const std::optional<SafeSet>& safe,
                      const VerifyConfig& cfg) {
  // Table methodology: one computation per method, ratios of final hulls.
  VerifyConfig single = cfg;
  single.max_rounds = 1;
  CompareResult res;
  res.entire = verify_entire(net, x, safe, single);
  res.boundary = verify_auto(net, x, safe, single);
  res.ratios.resize(net.output_dim());
  for (Eigen::Index i = 0; i < net.output_dim(); ++i) {
    const double we = res.entire.final_hull(i).width();
    const double wb = res.boundary.final_hull(i).width();
    res.ratios(i) = we == 0.0 ? (wb == 0.0 ? 1.0 : std::numeric_limits<double>::infinity())
                              : wb / we;
  }
  res.min_ratio = res.ratios.minCoeff();
  res.max_ratio = res.ratios.maxCoeff();
  res.mean_ratio = res.ratios.mean();
  return res;
}

}  // namespace setbound
