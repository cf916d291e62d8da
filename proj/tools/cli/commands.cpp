#include "commands.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>
#include <zlib.h>

#include "dillon/kloosterman.hpp"
#include "dillon/walsh.hpp"

namespace dillon::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> hexList(const std::vector<Elem>& elems) {
  std::vector<std::string> out;
  for (Elem e : elems) out.push_back(toHex(e));
  return out;
}

void emit(const std::string& text, const std::optional<std::string>& outPath, std::ostream& out) {
  if (!outPath) {
    out << text;
    return;
  }
  std::ofstream f(*outPath, std::ios::binary);
  if (!f) throw UsageError("cannot write " + *outPath);
  f << text;
}

bool endsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

KloostermanTable loadOrBuild(unsigned m, const RunConfig& config, json& info) {
  auto field = config.field(m);
  const Subfield fm(field, m);
  if (config.tableCacheDir.empty()) {
    info["cache"] = "disabled";
    return KloostermanTable::build(fm, config.parallelism);
  }
  std::filesystem::create_directories(config.tableCacheDir);
  const auto path = config.tableCacheDir / cacheFileName(*field);
  if (std::ifstream in(path, std::ios::binary); in) {
    info["cache"] = "hit";
    return readCsv(in, field);
  }
  auto table = KloostermanTable::build(fm, config.parallelism);
  // Write to a sibling then rename, so a reader never sees a partial table.
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    writeCsv(table, out);
  }
  std::filesystem::rename(tmp, path);
  info["cache"] = "stored";
  return table;
}

}  // namespace

int cmdVerify(const std::string& claimId, const ClaimParams& params, const RunConfig& config,
              const std::optional<std::string>& outPath, std::ostream& out) {
  const auto report = runClaim(claimId, params, config);
  emit(render(report, config.outputFormat, config.omitTimings), outPath, out);
  return report.status == Status::kVerified ? 0 : 1;
}

int cmdSearch(unsigned m, unsigned k, const RunConfig& config, const std::optional<std::string>& outPath,
              std::ostream& out) {
  config.validate();
  if (m == 0 || m > 12) throw UsageError("--m must be in [1, 12]");
  if (k == 0 || m % k != 0) throw UsageError("--k must divide --m");
  const DillonFamily fam(config.field(2 * m), k);
  const auto r = fam.search(config.parallelism);
  json cosets = json::array();
  for (const auto& c : r.cosets) cosets.push_back(hexList(c));
  json j{{"m", m},
         {"k", k},
         {"modulus", toHex(std::uint64_t{fam.ambient()->modulus()})},
         {"coefficients", hexList(r.coefficients)},
         {"cosets", cosets},
         {"cosetsTested", r.cosetsTested},
         {"cosetsPassingFilter", r.cosetsPassingFilter}};
  if (config.outputFormat == OutputFormat::kJson) {
    emit(j.dump(2) + "\n", outPath, out);
  } else {
    std::ostringstream os;
    if (config.outputFormat == OutputFormat::kCsv) {
      os << "a\n";
      for (Elem a : r.coefficients) os << toHex(a) << "\n";
    } else {
      os << "m=" << m << " k=" << k << " bent=" << r.coefficients.size() << " cosetsTested=" << r.cosetsTested
         << " cosetsPassingFilter=" << r.cosetsPassingFilter << "\n";
      for (Elem a : r.coefficients) os << "  " << toHex(a) << "\n";
    }
    emit(os.str(), outPath, out);
  }
  return 0;
}

int cmdKloosterman(unsigned m, bool zerosOnly, const RunConfig& config, const std::optional<std::string>& outPath,
                   std::ostream& out) {
  config.validate();
  if (m == 0 || m > 20) throw UsageError("--m must be in [1, 20]");
  json info;
  const auto table = loadOrBuild(m, config, info);
  const auto zeros = table.zeros();
  if (outPath) {
    std::ofstream f(*outPath, std::ios::binary);
    if (!f) throw UsageError("cannot write " + *outPath);
    writeCsv(table, f);
  }
  if (zerosOnly) {
    for (Elem z : zeros) out << toHex(z) << "\n";
    return 0;
  }
  json j{{"m", m}, {"modulus", toHex(std::uint64_t{table.field().field().modulus()})}};
  j["cache"] = info["cache"];
  j["zeros"] = hexList(zeros);
  if (m >= 4) {
    const auto s = mod16Statistics(table);
    j["mod16"] = json{{"nonzeroElements", s.nonzeroElements},
                      {"passFilter", s.passFilter},
                      {"divisibleBy16", s.divisibleBy16},
                      {"zeros", s.zeros},
                      {"violations", hexList(s.violations)}};
  }
  out << j.dump(2) << "\n";
  return 0;
}

void writeSpectrumCsv(const WalshSpectrum& spectrum, const std::string& path) {
  std::ostringstream os;
  os << "a,b,W\n";
  for (std::size_t i = 0; i < spectrum.components.size(); ++i) {
    const std::string b = toHex(spectrum.components[i]);
    const auto& row = spectrum.values[i];
    for (std::size_t a = 0; a < row.size(); ++a) os << toHex(Elem{static_cast<std::uint32_t>(a)}) << "," << b << "," << row[a] << "\n";
  }
  const std::string text = os.str();
  if (endsWith(path, ".gz")) {
    gzFile gz = gzopen(path.c_str(), "wb");
    if (!gz) throw UsageError("cannot write " + path);
    const int written = gzwrite(gz, text.data(), static_cast<unsigned>(text.size()));
    const int closed = gzclose(gz);
    if (written != static_cast<int>(text.size()) || closed != Z_OK) throw std::runtime_error("gzip write failed: " + path);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

int cmdSpectrum(unsigned m, unsigned k, const std::string& aHex, const RunConfig& config,
                const std::optional<std::string>& outPath, std::ostream& out) {
  config.validate();
  if (m == 0 || 2 * m > 20) throw UsageError("--m must be in [1, 10]");
  if (k == 0 || m % k != 0) throw UsageError("--k must divide --m");
  std::uint64_t raw = 0;
  try {
    raw = parseHex(aHex);
  } catch (const std::exception&) {
    throw UsageError("--a is not a hex field element: " + aHex);
  }
  const DillonFamily fam(config.field(2 * m), k);
  const Elem a{static_cast<std::uint32_t>(raw)};
  if (raw == 0 || raw >= fam.ambient()->size())
    throw UsageError("--a must be a nonzero element of GF(2^" + std::to_string(2 * m) + ")");
  const auto s = fullWalshSpectrum(fam.evaluate(a), config.parallelism);
  if (outPath) writeSpectrumCsv(s, *outPath);

  const std::int64_t expected = std::int64_t{1} << (4 * m);
  json parseval = json::array();
  bool parsevalOk = true;
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    std::int64_t sum = 0;
    for (auto v : s.values[i]) sum += std::int64_t{v} * v;
    parsevalOk = parsevalOk && sum == expected;
    parseval.push_back(json{{"b", toHex(s.components[i])}, {"sumSquares", sum}});
  }
  json j{{"m", m},
         {"k", k},
         {"a", toHex(a)},
         {"normalized", toHex(fam.normalize(a))},
         {"maxAbs", s.maxAbs},
         {"minAbs", s.minAbs},
         {"bent", s.isBent},
         {"parsevalOk", parsevalOk},
         {"parseval", parseval}};
  out << j.dump(2) << "\n";
  return parsevalOk ? 0 : 1;
}

int cmdFieldInfo(unsigned n, std::optional<unsigned> k, const RunConfig& config, std::ostream& out) {
  config.validate();
  if (n == 0 || n > 24) throw UsageError("--m must be in [1, 24]");
  if (k && (*k == 0 || n % *k != 0)) throw UsageError("--k must divide the field degree");
  const auto field = config.field(n);
  json j{{"n", n},
         {"modulus", toHex(std::uint64_t{field->modulus()})},
         {"generator", toHex(field->generator())},
         {"logTables", field->hasLogTables()}};
  json subfields = json::array();
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0 || (k && d != *k)) continue;
    const Subfield s(field, d);
    json e{{"k", d}, {"primitive", toHex(s.primitive())}};
    std::vector<Elem> basis(s.basis().begin(), s.basis().end());
    e["basis"] = hexList(basis);
    if (k) {
      const auto dual = dualBasisOf(s);
      e["dualBasis"] = hexList(dual.dual);
      if (d <= 8) e["elements"] = hexList(s.elements());
    }
    subfields.push_back(e);
  }
  j["subfields"] = subfields;
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace dillon::cli
