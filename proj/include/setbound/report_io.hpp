#pragma once

#include <setbound/verify.hpp>

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace setbound {

inline constexpr const char* kReportSchemaTag = "setbound-report/1";

nlohmann::json box_to_json(const Boxd& box);
nlohmann::json safe_to_json(const SafeSet& s);
nlohmann::json report_to_json(const Report& report);
nlohmann::json compare_to_json(const CompareResult& cmp);

// Per-round rows: round, k, cells, hull bounds per dimension, contained,
// seconds. Full double precision.
std::string report_to_csv(const Report& report);

std::string verdict_name(Verdict v);

}  // namespace setbound
