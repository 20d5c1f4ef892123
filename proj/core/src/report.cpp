#include "spatialvote/report.hpp"

#include <json.hpp>

namespace spatialvote {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json point_strings(const RatPoint& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : p) arr.push_back(c.str());
  return arr;
}

}  // namespace

std::string report_to_json(const RunReport& report) {
  ordered_json doc;
  doc["method"] = report.method;
  doc["objective"] = report.objective;
  doc["d"] = report.d;
  doc["p"] = report.p;
  doc["n"] = report.n;
  doc["m"] = report.m;
  doc["nu"] = report.result.nu;
  doc["rank"] = report.result.rank;
  doc["witness"] = point_strings(report.result.witness);
  doc["voter_set"] = report.result.voter_set;
  doc["exact"] = report.result.exact;
  doc["verified"] = true;  // finalize_result throws before an unverified report
  doc["regions_visited"] = report.result.regions_visited;
  doc["branches"] = report.result.branches;
  doc["threads"] = report.threads;
  doc["wall_ms"] = report.wall_ms;
  doc["warnings"] = report.warnings;
  return doc.dump(2) + "\n";
}

std::string eval_to_json(const ElectionInstance& inst, const RatPoint& t) {
  std::vector<int> voters = winning_set(inst, t);
  ordered_json doc;
  doc["point"] = point_strings(t);
  doc["nu"] = static_cast<long long>(voters.size());
  doc["rank"] = eval_rank(inst, t);
  doc["voter_set"] = voters;
  return doc.dump(2) + "\n";
}

}  // namespace spatialvote
