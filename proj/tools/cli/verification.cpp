#include "verification.hpp"

#include <sstream>

namespace dillon::cli {

std::string toString(Status s) {
  switch (s) {
    case Status::kVerified:
      return "verified";
    case Status::kCounterexample:
      return "counterexample";
    case Status::kSkipped:
      return "skipped";
  }
  return "skipped";
}

void VerificationReport::add(CheckOutcome check) { checks.push_back(std::move(check)); }

void VerificationReport::add(const ChainReport& chain) {
  for (const auto& c : chain.checks) checks.push_back(c);
}

void VerificationReport::finalize(std::int64_t elapsed) {
  for (const auto& c : checks) {
    if (c.informational) continue;
    for (const auto& v : c.violations) counterexamples.push_back(c.id + ": " + v);
  }
  status = counterexamples.empty() ? Status::kVerified : Status::kCounterexample;
  elapsedMillis = elapsed;
}

nlohmann::ordered_json toJson(const CheckOutcome& c, bool omitTimings) {
  nlohmann::ordered_json j;
  j["id"] = c.id;
  j["domain"] = c.domain;
  j["examined"] = c.examined;
  j["violations"] = c.violations;
  if (c.informational) j["informational"] = true;
  auto facts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.facts) facts[k] = v;
  j["facts"] = facts;
  j["elapsed"] = omitTimings ? 0 : c.elapsedMillis;
  return j;
}

nlohmann::ordered_json toJson(const VerificationReport& r, bool omitTimings) {
  nlohmann::ordered_json j;
  j["claim"] = r.claimId;
  j["parameters"] = r.parameters;
  j["status"] = toString(r.status);
  j["counterexamples"] = r.counterexamples;
  j["elapsed"] = omitTimings ? 0 : r.elapsedMillis;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) checks.push_back(toJson(c, omitTimings));
  j["checks"] = checks;
  j["details"] = r.details;
  return j;
}

std::string render(const VerificationReport& r, OutputFormat format, bool omitTimings) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::kJson:
      os << toJson(r, omitTimings).dump(2) << "\n";
      break;
    case OutputFormat::kCsv:
      os << "claim,check,status,examined,violations\n";
      for (const auto& c : r.checks)
        os << r.claimId << "," << c.id << "," << (c.informational ? "info" : c.ok() ? "ok" : "failed") << ","
           << c.examined << "," << c.violations.size() << "\n";
      break;
    case OutputFormat::kText:
      os << r.claimId << ": " << toString(r.status) << " (" << (omitTimings ? 0 : r.elapsedMillis) << " ms)\n";
      for (const auto& c : r.checks) {
        os << "  [" << (c.informational ? "info" : c.ok() ? " ok " : "FAIL") << "] " << c.id << " - " << c.domain
           << " - " << c.examined << " examined";
        for (const auto& [k, v] : c.facts) os << ", " << k << "=" << v;
        os << "\n";
      }
      for (const auto& ce : r.counterexamples) os << "  counterexample " << ce << "\n";
      break;
  }
  return os.str();
}

}  // namespace dillon::cli
