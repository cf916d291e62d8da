#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"

using namespace dillon;
using namespace dillon::cli;

namespace {

struct Flags {
  std::optional<unsigned> m;
  std::optional<unsigned> k;
  std::string a;
  std::vector<std::string> moduli;
  std::optional<std::string> out;
  std::string format = "json";
  unsigned jobs = 1;
  std::string cacheDir;
  bool directWalsh = false;
  unsigned sample = 0;
  bool noTiming = false;
  bool zerosOnly = false;
  std::string claim;
};

void addCommon(CLI::App* cmd, Flags& f) {
  cmd->add_option("--modulus", f.moduli, "irreducible modulus (hex) overriding the default for its degree")
      ->take_all();
  cmd->add_option("--out", f.out, "write the main output to this path");
  cmd->add_option("--format", f.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--jobs", f.jobs, "worker threads");
  cmd->add_flag("--no-timing", f.noTiming, "report every elapsed time as 0");
}

RunConfig makeConfig(const Flags& f) {
  RunConfig c;
  for (const auto& text : f.moduli) {
    std::uint64_t mod = 0;
    try {
      mod = parseHex(text);
    } catch (const std::exception&) {
      throw UsageError("--modulus is not hex: " + text);
    }
    if (mod > 0xffffffffu) throw UsageError("--modulus too large: " + text);
    c.overrideModulus(static_cast<std::uint32_t>(mod));
  }
  if (!f.cacheDir.empty()) {
    c.tableCacheDir = f.cacheDir;
  } else if (const char* env = std::getenv(kCacheDirEnv)) {
    c.tableCacheDir = env;
  }
  c.parallelism = f.jobs;
  c.outputFormat = parseFormat(f.format);
  c.omitTimings = f.noTiming;
  c.validate();
  return c;
}

unsigned required(const std::optional<unsigned>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dillon monomial bent function verification toolkit"};
  app.require_subcommand(1);
  Flags f;

  auto* verify = app.add_subcommand("verify", "run an exhaustive verification claim");
  verify->add_option("claim", f.claim, "claim id")->required();
  verify->add_option("--m", f.m);
  verify->add_option("--k", f.k);
  verify->add_flag("--direct-walsh", f.directWalsh, "also check sampled coefficients by full spectra");
  verify->add_option("--sample", f.sample, "number of coefficients for --direct-walsh");
  addCommon(verify, f);

  auto* search = app.add_subcommand("search", "list every bent coefficient of Tr^2m_k(a x^(2^m-1))");
  search->add_option("--m", f.m)->required();
  search->add_option("--k", f.k)->required();
  addCommon(search, f);

  auto* kloosterman = app.add_subcommand("kloosterman", "Kloosterman table, zeros and mod-16 statistics");
  kloosterman->add_option("--m", f.m)->required();
  kloosterman->add_flag("--zeros-only", f.zerosOnly, "print only the zeros, one per line");
  kloosterman->add_option("--cache-dir", f.cacheDir, std::string("table cache (default $") + kCacheDirEnv + ")");
  addCommon(kloosterman, f);

  auto* spectrum = app.add_subcommand("spectrum", "full Walsh spectrum of one Dillon monomial");
  spectrum->add_option("--m", f.m)->required();
  spectrum->add_option("--k", f.k)->required();
  spectrum->add_option("--a", f.a, "coefficient in GF(2^2m), hex")->required();
  addCommon(spectrum, f);

  auto* fieldInfo = app.add_subcommand("field-info", "modulus, generator and subfields of GF(2^m)");
  fieldInfo->add_option("--m", f.m, "field degree")->required();
  fieldInfo->add_option("--k", f.k, "describe only this subfield");
  addCommon(fieldInfo, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const RunConfig config = makeConfig(f);
    if (verify->parsed()) {
      ClaimParams p{f.m, f.k, f.directWalsh, f.sample};
      return cmdVerify(f.claim, p, config, f.out, std::cout);
    }
    if (search->parsed()) return cmdSearch(*f.m, *f.k, config, f.out, std::cout);
    if (kloosterman->parsed()) return cmdKloosterman(*f.m, f.zerosOnly, config, f.out, std::cout);
    if (spectrum->parsed()) return cmdSpectrum(*f.m, *f.k, f.a, config, f.out, std::cout);
    if (fieldInfo->parsed()) return cmdFieldInfo(required(f.m, "--m"), f.k, config, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
