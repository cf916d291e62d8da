#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dillon/report.hpp"
#include "run_config.hpp"

namespace dillon::cli {

enum class Status { kVerified, kCounterexample, kSkipped };

std::string toString(Status s);

struct VerificationReport {
  std::string claimId;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  Status status = Status::kSkipped;
  std::vector<std::string> counterexamples;
  std::int64_t elapsedMillis = 0;
  std::vector<CheckOutcome> checks;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  void add(CheckOutcome check);
  void add(const ChainReport& chain);
  /// Collects violations of every enforced check into counterexamples and
  /// sets status from them.
  void finalize(std::int64_t elapsed);
};

nlohmann::ordered_json toJson(const CheckOutcome& c, bool omitTimings);
nlohmann::ordered_json toJson(const VerificationReport& r, bool omitTimings);
std::string render(const VerificationReport& r, OutputFormat format, bool omitTimings);

}  // namespace dillon::cli
