#pragma once

#include <map>
#include <string>
#include <vector>

namespace eulerstab {

// One verification check. `status` is one of pass | fail | witness |
// none-found; `ok` says whether that status matches the expectation of the
// suite that produced it (finding a witness can be the expected outcome).
// Asserted checks gate exit codes; informational ones never do.
struct CheckResult {
  std::string check;
  std::map<std::string, std::string> params;
  std::string status;
  bool ok = true;
  std::string severity = "asserted";
  std::string detail;
  std::string witnessJson;  // pre-rendered JSON object, may be empty
};

std::string results_to_json(const std::vector<CheckResult>& results);
std::string result_line(const CheckResult& r);
bool all_asserted_ok(const std::vector<CheckResult>& results);

}  // namespace eulerstab
