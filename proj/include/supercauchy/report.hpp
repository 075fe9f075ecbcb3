#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace supercauchy {

enum class CheckStatus { pass, fail, vacuous };

const char* to_string(CheckStatus s);

struct Witness {
  std::string word;  // offending word of the algebra
  std::string lhs;
  std::string rhs;
};

// outcome of one verification run; serializes to a single JSON line
struct VerificationReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;  // echoed inputs (incl. seed)
  CheckStatus status = CheckStatus::pass;
  double max_rel_error = 0.0;
  std::optional<Witness> witness;
  double wall_time_ms = 0.0;
  std::string note;

  void param(const std::string& key, const std::string& value) { params.emplace_back(key, value); }
  void param(const std::string& key, long value) { params.emplace_back(key, std::to_string(value)); }
  void param(const std::string& key, double value);

  bool ok() const { return status != CheckStatus::fail; }
  std::string to_json() const;
};

class WallTimer {
 public:
  WallTimer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace supercauchy
