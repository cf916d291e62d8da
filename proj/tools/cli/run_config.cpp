#include "run_config.hpp"

namespace dillon::cli {

OutputFormat parseFormat(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "text") return OutputFormat::kText;
  throw UsageError("unknown output format '" + name + "' (expected json, csv or text)");
}

void RunConfig::overrideModulus(std::uint32_t modulus) {
  const int n = poly2::degree(modulus);
  if (n < 1 || n > static_cast<int>(Field::kMaxDegree))
    throw UsageError("modulus 0x" + toHex(std::uint64_t{modulus}) + " has unsupported degree");
  if (!poly2::isIrreducible(modulus)) throw UsageError("modulus 0x" + toHex(std::uint64_t{modulus}) + " is reducible");
  fieldOverrides[static_cast<unsigned>(n)] = modulus;
}

std::optional<std::uint32_t> RunConfig::modulusFor(unsigned n) const {
  auto it = fieldOverrides.find(n);
  if (it == fieldOverrides.end()) return std::nullopt;
  return it->second;
}

FieldPtr RunConfig::field(unsigned n) const { return Field::build(n, modulusFor(n)); }

void RunConfig::validate() const {
  if (parallelism < 1) throw UsageError("--jobs must be at least 1");
}

}  // namespace dillon::cli
