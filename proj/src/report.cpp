#include "supercauchy/report.hpp"

#include <json.hpp>

#include <sstream>

namespace supercauchy {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::vacuous: return "vacuous";
  }
  return "?";
}

void VerificationReport::param(const std::string& key, double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  params.emplace_back(key, os.str());
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  nlohmann::json p = nlohmann::json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  j["status"] = to_string(status);
  j["max_rel_error"] = max_rel_error;
  if (witness) {
    j["witness"] = {{"word", witness->word}, {"lhs", witness->lhs}, {"rhs", witness->rhs}};
  } else {
    j["witness"] = nullptr;
  }
  j["wall_time_ms"] = wall_time_ms;
  if (!note.empty()) j["note"] = note;
  return j.dump();
}

}  // namespace supercauchy
