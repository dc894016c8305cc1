#include "esp/report_json.hpp"

#include "esp/text_format.hpp"

namespace esp {

nlohmann::ordered_json to_json(const CollisionPair& pair) {
  nlohmann::ordered_json j;
  j["first"] = to_text(pair.first());
  j["second"] = to_text(pair.second());
  j["shared_image"] = to_text(pair.shared_image());
  return j;
}

nlohmann::ordered_json to_json(const VerificationReport& report, bool include_run_info) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["partitions_checked"] = report.partitions_checked;
  j["distinct_images"] = report.distinct_images;
  auto collisions = nlohmann::ordered_json::array();
  for (const auto& c : report.collisions) collisions.push_back(to_json(c));
  j["collisions"] = std::move(collisions);
  auto failures = nlohmann::ordered_json::array();
  for (const auto& p : report.roundtrip_failures) failures.push_back(to_text(p));
  j["roundtrip_failures"] = std::move(failures);
  if (include_run_info) {
    j["wall_time_ms"] = report.wall_time.count();
    j["workers"] = report.workers;
  }
  return j;
}

}  // namespace esp
