// Registry of desk-scale verification claims. Each entry names the flags it
// accepts and the runner that sweeps it; adding a claim is adding an entry.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "run_config.hpp"
#include "verification.hpp"

namespace dillon::cli {

struct ClaimParams {
  std::optional<unsigned> m;
  std::optional<unsigned> k;
  bool directWalsh = false;
  unsigned sample = 0;
};

struct ClaimSpec {
  std::string id;
  std::string summary;
  /// Flags the claim reads; any other flag that is set is a usage error.
  std::vector<std::string> accepts;
  std::function<VerificationReport(const ClaimParams&, const RunConfig&)> run;
};

const std::vector<ClaimSpec>& claimRegistry();
const ClaimSpec* findClaim(const std::string& id);

/// Validates parameters against the claim's schema and runs it. Throws
/// UsageError for unknown claims and bad parameters.
VerificationReport runClaim(const std::string& id, const ClaimParams& params, const RunConfig& config);

}  // namespace dillon::cli
