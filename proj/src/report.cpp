#include "ramond/report.hpp"

namespace ramond {

Json Report::canonical_json() const {
  Json j;
  j["schema"] = kSchema;
  j["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  j["suite"] = suite;
  j["bound"] = bound;
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json jc;
    jc["id"] = c.id;
    jc["inputs"] = c.inputs;
    jc["status"] = c.pass ? "pass" : "fail";
    if (!c.pass) jc["residue"] = c.residue;
    if (c.pass && !c.note.empty()) jc["note"] = c.note;
    arr.push_back(std::move(jc));
  }
  j["checks"] = std::move(arr);
  j["summary"] = Json{{"total", checks.size()},
                      {"passed", checks.size() - failed()},
                      {"failed", failed()}};
  return j;
}

Json Report::to_json() const {
  Json j = canonical_json();
  j["timing_ms"] = timing_ms;
  return j;
}

}  // namespace ramond
