#include <setbound/report_io.hpp>

#include <nlohmann/json.hpp>

#include <sstream>

namespace setbound {

using nlohmann::json;

std::string verdict_name(Verdict v) { return v == Verdict::Safe ? "Safe" : "Unknown"; }

json box_to_json(const Boxd& box) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < box.size(); ++i) arr.push_back({box(i).lo(), box(i).hi()});
  return arr;
}

json safe_to_json(const SafeSet& s) {
  json arr = json::array();
  for (const auto& b : s.bounds) {
    if (b)
      arr.push_back({b->lo(), b->hi()});
    else
      arr.push_back(nullptr);
  }
  return arr;
}

namespace {

json homeo_to_json(const HomeoCertificate& c) {
  json j;
  j["verdict"] = c.verdict == HomeoVerdict::Verified ? "Verified" : "Inconclusive";
  j["det_interval"] = {c.det_interval.lo(), c.det_interval.hi()};
  j["box"] = box_to_json(c.box);
  return j;
}

json openmap_to_json(const OpenMapCertificate& c) {
  json j;
  j["verdict"] = c.verdict == OpenMapVerdict::Verified ? "Verified" : "Refuted";
  json layers = json::array();
  for (const LayerFinding& f : c.findings) {
    layers.push_back({{"layer", f.layer},
                      {"in_dim", f.in_dim},
                      {"out_dim", f.out_dim},
                      {"non_increasing", f.non_increasing},
                      {"rank", f.rank},
                      {"required_rank", f.required_rank},
                      {"monotone_activation", f.monotone_activation},
                      {"ok", f.ok()}});
  }
  j["layers"] = std::move(layers);
  return j;
}

}  // namespace

json report_to_json(const Report& report) {
  json j;
  j["schema"] = kReportSchemaTag;
  j["method"] = report.method;
  j["engine"] = engine_name(report.engine);
  j["verdict"] = verdict_name(report.verdict);
  j["input"] = box_to_json(report.input);
  j["safe"] = report.safe ? safe_to_json(*report.safe) : json(nullptr);
  j["final_hull"] = box_to_json(report.final_hull);
  json rounds = json::array();
  for (const RoundRecord& r : report.rounds) {
    json row = {{"round", r.round},     {"k", r.k},
                {"cells", r.cells},     {"hull", box_to_json(r.hull)},
                {"contained", r.contained}, {"seconds", r.seconds}};
    if (report.method == "subset") row["homeo_cells"] = r.homeo_cells;
    rounds.push_back(std::move(row));
  }
  j["rounds"] = std::move(rounds);
  json certs = json::object();
  certs["homeomorphism"] = report.homeo ? homeo_to_json(*report.homeo) : json(nullptr);
  certs["open_map"] = report.open_map ? openmap_to_json(*report.open_map) : json(nullptr);
  j["certificates"] = std::move(certs);
  if (report.open_suffix >= 0) j["open_suffix"] = report.open_suffix;
  if (report.prefix_hull) j["prefix_hull"] = box_to_json(*report.prefix_hull);
  return j;
}

json compare_to_json(const CompareResult& cmp) {
  json j;
  j["schema"] = kReportSchemaTag;
  j["entire"] = report_to_json(cmp.entire);
  j["boundary"] = report_to_json(cmp.boundary);
  json ratios = json::array();
  for (Eigen::Index i = 0; i < cmp.ratios.size(); ++i) ratios.push_back(cmp.ratios(i));
  j["ratios"] = std::move(ratios);
  j["min_ratio"] = cmp.min_ratio;
  j["max_ratio"] = cmp.max_ratio;
  j["mean_ratio"] = cmp.mean_ratio;
  return j;
}

std::string report_to_csv(const Report& report) {
  std::ostringstream out;
  out.precision(17);
  out << "round,k,cells";
  for (Eigen::Index i = 0; i < report.final_hull.size(); ++i) out << ",lo" << i << ",hi" << i;
  out << ",contained,seconds\n";
  for (const RoundRecord& r : report.rounds) {
    out << r.round << "," << r.k << "," << r.cells;
    for (Eigen::Index i = 0; i < r.hull.size(); ++i)
      out << "," << r.hull(i).lo() << "," << r.hull(i).hi();
    out << "," << (r.contained ? 1 : 0) << "," << r.seconds << "\n";
  }
  return out.str();
}

}  // namespace setbound
