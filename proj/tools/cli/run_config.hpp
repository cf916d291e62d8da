#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "dillon/gf2field.hpp"

namespace dillon::cli {

/// Bad flags or out-of-range parameters; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { kJson, kCsv, kText };

OutputFormat parseFormat(const std::string& name);

inline constexpr const char* kCacheDirEnv = "DILLON_CACHE_DIR";

struct RunConfig {
  /// Modulus per field degree; other degrees use the default modulus.
  std::map<unsigned, std::uint32_t> fieldOverrides;
  std::filesystem::path tableCacheDir;
  unsigned parallelism = 1;
  OutputFormat outputFormat = OutputFormat::kJson;
  /// Zero every elapsed-time field so reports compare byte for byte.
  bool omitTimings = false;

  /// Registers a modulus override under its own degree.
  void overrideModulus(std::uint32_t modulus);
  FieldPtr field(unsigned n) const;
  std::optional<std::uint32_t> modulusFor(unsigned n) const;
  void validate() const;
};

}  // namespace dillon::cli
