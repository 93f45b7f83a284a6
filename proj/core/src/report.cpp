#include "eulerstab/report.hpp"

#include <json.hpp>

namespace eulerstab {

namespace {

nlohmann::ordered_json params_json(const std::map<std::string, std::string>& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : p) {
    // Numeric-looking values are emitted as numbers.
    bool numeric = !v.empty();
    for (std::size_t i = 0; i < v.size() && numeric; ++i)
      numeric = std::isdigit(static_cast<unsigned char>(v[i])) ||
                (i == 0 && v[i] == '-');
    if (numeric)
      j[k] = std::stoll(v);
    else
      j[k] = v;
  }
  return j;
}

}  // namespace

std::string results_to_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["parameters"] = params_json(r.params);
    j["status"] = r.status;
    j["ok"] = r.ok;
    j["severity"] = r.severity;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (!r.witnessJson.empty()) j["witness"] = nlohmann::ordered_json::parse(r.witnessJson);
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::string result_line(const CheckResult& r) {
  std::string line = r.ok ? "PASS" : "FAIL";
  if (r.severity == "informational") line = "INFO";
  line += " " + r.check;
  if (!r.params.empty()) {
    line += " [";
    bool first = true;
    for (const auto& [k, v] : r.params) {
      if (!first) line += " ";
      first = false;
      line += k + "=" + v;
    }
    line += "]";
  }
  line += " status=" + r.status;
  if (!r.detail.empty()) line += " | " + r.detail;
  return line;
}

bool all_asserted_ok(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.severity == "asserted" && !r.ok) return false;
  return true;
}

}  // namespace eulerstab
