// Outcome records for exhaustive checks. Serialization lives in the CLI.

#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dillon {

/// One swept statement: what was checked, over which domain, and every
/// element that broke it.
struct CheckOutcome {
  CheckOutcome() = default;
  CheckOutcome(std::string checkId, std::string sweptDomain) : id(std::move(checkId)), domain(std::move(sweptDomain)) {}

  std::string id;
  std::string domain;
  std::uint64_t examined = 0;
  std::vector<std::string> violations;
  /// Facts worth printing that are not pass/fail (counts, witnesses).
  std::vector<std::pair<std::string, std::string>> facts;
  std::int64_t elapsedMillis = 0;
  /// Informational checks are reported but never fail a claim.
  bool informational = false;

  bool ok() const { return informational || violations.empty(); }
  void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
};

struct ChainReport {
  std::string claim;
  std::vector<CheckOutcome> checks;

  bool verified() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace dillon
