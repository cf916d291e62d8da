#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "claims.hpp"
#include "dillon/bent.hpp"
#include "run_config.hpp"

namespace dillon::cli {

// Each command writes its primary output to `out` (or to outPath when set)
// and returns the process exit code: 0 success / verified, 1 counterexample.
// Usage problems throw UsageError (exit code 2).

int cmdVerify(const std::string& claimId, const ClaimParams& params, const RunConfig& config,
              const std::optional<std::string>& outPath, std::ostream& out);

int cmdSearch(unsigned m, unsigned k, const RunConfig& config, const std::optional<std::string>& outPath,
              std::ostream& out);

int cmdKloosterman(unsigned m, bool zerosOnly, const RunConfig& config, const std::optional<std::string>& outPath,
                   std::ostream& out);

int cmdSpectrum(unsigned m, unsigned k, const std::string& aHex, const RunConfig& config,
                const std::optional<std::string>& outPath, std::ostream& out);

int cmdFieldInfo(unsigned n, std::optional<unsigned> k, const RunConfig& config, std::ostream& out);

/// Writes "a,b,W" rows for every spectrum entry; gzip when the path ends in ".gz".
void writeSpectrumCsv(const WalshSpectrum& spectrum, const std::string& path);

}  // namespace dillon::cli
