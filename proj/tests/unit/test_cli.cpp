#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <sys/wait.h>
#include <zlib.h>

#include "cli/commands.hpp"

using namespace dillon;
using namespace dillon::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("dillon-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunConfig quiet(unsigned jobs = 1) {
  RunConfig c;
  c.parallelism = jobs;
  c.omitTimings = true;
  return c;
}

nlohmann::json verifyJson(const std::string& claim, ClaimParams p = {}, RunConfig cfg = quiet()) {
  std::ostringstream os;
  cmdVerify(claim, p, cfg, std::nullopt, os);
  return nlohmann::json::parse(os.str());
}

int run(const std::string& args) {
  const int raw = std::system((std::string(DILLON_EXE) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST_CASE("every registered claim verifies with defaults", "[cli]") {
  for (const auto& claim : claimRegistry()) {
    if (claim.id == "thm1") continue;  // covered below with a smaller bound
    INFO(claim.id);
    const auto r = runClaim(claim.id, {}, quiet());
    CHECK(r.status == Status::kVerified);
    CHECK(r.counterexamples.empty());
    CHECK_FALSE(r.checks.empty());
  }
  ClaimParams p;
  p.m = 12;
  CHECK(runClaim("thm1", p, quiet()).status == Status::kVerified);
}

TEST_CASE("the claim set is the documented one", "[cli]") {
  std::vector<std::string> ids;
  for (const auto& c : claimRegistry()) ids.push_back(c.id);
  CHECK(ids == std::vector<std::string>{"thm1", "thm2", "thm3", "thm4", "thm5", "thm6", "prop3-equiv", "prop4",
                                        "example-m6k2", "identities"});
}

TEST_CASE("example report lists six coefficients", "[cli]") {
  const auto j = verifyJson("example-m6k2");
  CHECK(j["status"] == "verified");
  CHECK(j["counterexamples"].empty());
  CHECK(j["details"]["coefficients"] == nlohmann::json({"20", "82", "400", "482", "900", "920"}));
  CHECK(j["elapsed"] == 0);
}

TEST_CASE("single-parameter verifications", "[cli]") {
  ClaimParams p;
  p.m = 6;
  const auto thm4 = verifyJson("thm4", p);
  CHECK(thm4["status"] == "verified");
  CHECK(thm4["checks"].size() == 1);
  CHECK(thm4["checks"][0]["id"] == "no-bent-coefficient-m6-k3");
  p.m = 10;
  CHECK(verifyJson("prop4", p)["status"] == "verified");
  ClaimParams t;
  t.k = 3;
  t.directWalsh = true;
  t.sample = 1;
  const auto thm5 = verifyJson("thm5", t);
  CHECK(thm5["status"] == "verified");
  CHECK(thm5["checks"].back()["id"] == "direct-walsh-sample");
}

TEST_CASE("usage errors", "[cli]") {
  ClaimParams none;
  CHECK_THROWS_AS(runClaim("thm7", none, quiet()), UsageError);
  ClaimParams p;
  p.m = 13;
  CHECK_THROWS_AS(runClaim("thm3", p, quiet()), UsageError);
  p.m = 5;
  CHECK_THROWS_AS(runClaim("thm4", p, quiet()), UsageError);
  p.m = 14;
  CHECK_THROWS_AS(runClaim("thm4", p, quiet()), UsageError);
  ClaimParams k;
  k.k = 4;
  CHECK_THROWS_AS(runClaim("thm5", k, quiet()), UsageError);
  CHECK_THROWS_AS(runClaim("example-m6k2", k, quiet()), UsageError);
  ClaimParams dw;
  dw.directWalsh = true;
  CHECK_THROWS_AS(runClaim("thm5", dw, quiet()), UsageError);  // needs --sample
  CHECK_THROWS_AS(runClaim("thm3", dw, quiet()), UsageError);
  RunConfig bad = quiet();
  bad.parallelism = 0;
  CHECK_THROWS_AS(runClaim("thm2", none, bad), UsageError);
  std::ostringstream os;
  CHECK_THROWS_AS(cmdSearch(6, 4, quiet(), std::nullopt, os), UsageError);
  CHECK_THROWS_AS(cmdSearch(13, 1, quiet(), std::nullopt, os), UsageError);
  CHECK_THROWS_AS(cmdSpectrum(6, 2, "0", quiet(), std::nullopt, os), UsageError);
  CHECK_THROWS_AS(cmdSpectrum(6, 2, "1000", quiet(), std::nullopt, os), UsageError);
  CHECK_THROWS_AS(cmdSpectrum(11, 1, "1", quiet(), std::nullopt, os), UsageError);
  CHECK_THROWS_AS(cmdKloosterman(21, false, quiet(), std::nullopt, os), UsageError);
  CHECK_THROWS_AS(parseFormat("xml"), UsageError);
}

TEST_CASE("m = 2 is a counterexample to the even-m non-existence claim", "[cli]") {
  // k = 1: Tr^4_1(a x^3) is bent exactly at the two Kloosterman zeros of GF(4).
  ClaimParams p;
  p.m = 2;
  std::ostringstream os;
  CHECK(cmdVerify("thm4", p, quiet(), std::nullopt, os) == 1);
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["status"] == "counterexample");
  CHECK(j["counterexamples"].size() == 2);
  CHECK(j["details"]["2,1"]["bent"] == 2);
}

TEST_CASE("status is verified exactly when there are no counterexamples", "[cli][property]") {
  VerificationReport r;
  CheckOutcome info("i", "d");
  info.informational = true;
  info.violations.push_back("x");
  r.add(info);
  r.finalize(0);
  CHECK(r.status == Status::kVerified);
  CHECK(r.counterexamples.empty());

  CheckOutcome bad("b", "d");
  bad.violations.push_back("a=3");
  r.add(bad);
  r.counterexamples.clear();
  r.finalize(0);
  CHECK(r.status == Status::kCounterexample);
  CHECK(r.counterexamples == std::vector<std::string>{"b: a=3"});
  CHECK(render(r, OutputFormat::kText, true).find("counterexample b: a=3") != std::string::npos);
  CHECK(render(r, OutputFormat::kCsv, true) == "claim,check,status,examined,violations\n,i,info,0,1\n,b,failed,0,1\n");
}

TEST_CASE("output does not depend on the worker count", "[cli]") {
  for (const std::string claim : {"thm3", "thm5", "thm6", "prop3-equiv", "example-m6k2", "identities"}) {
    INFO(claim);
    for (auto format : {OutputFormat::kJson, OutputFormat::kText, OutputFormat::kCsv}) {
      RunConfig one = quiet(1), four = quiet(4);
      one.outputFormat = four.outputFormat = format;
      std::ostringstream a, b;
      cmdVerify(claim, {}, one, std::nullopt, a);
      cmdVerify(claim, {}, four, std::nullopt, b);
      CHECK(a.str() == b.str());
    }
  }
  std::ostringstream a, b;
  cmdSearch(8, 2, quiet(1), std::nullopt, a);
  cmdSearch(8, 2, quiet(3), std::nullopt, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("search report", "[cli]") {
  std::ostringstream os;
  CHECK(cmdSearch(6, 2, quiet(), std::nullopt, os) == 0);
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["coefficients"].size() == 6);
  CHECK(j["cosets"].size() == 2);
  for (auto [m, k] : {std::pair{6u, 6u}, std::pair{9u, 3u}}) {
    std::ostringstream e;
    cmdSearch(m, k, quiet(), std::nullopt, e);
    CHECK(nlohmann::json::parse(e.str())["coefficients"].empty());
  }
}

TEST_CASE("Kloosterman command and table cache", "[cli]") {
  TempDir dir;
  RunConfig cfg = quiet();
  cfg.tableCacheDir = dir.path / "cache";
  const auto first = (dir.path / "first.csv").string();
  const auto second = (dir.path / "second.csv").string();
  std::ostringstream a, b;
  cmdKloosterman(6, false, cfg, first, a);
  cmdKloosterman(6, false, cfg, second, b);
  CHECK(nlohmann::json::parse(a.str())["cache"] == "stored");
  CHECK(nlohmann::json::parse(b.str())["cache"] == "hit");
  CHECK(slurp(first) == slurp(second));
  CHECK(slurp(first) == slurp(cfg.tableCacheDir / cacheFileName(*Field::build(6))));

  std::ostringstream zeros;
  cmdKloosterman(4, true, quiet(), std::nullopt, zeros);
  CHECK(zeros.str() == "1\n2\n3\n4\n5\n");

  // zeros of K over GF(64) include every primitive 9th root of unity
  const auto j = nlohmann::json::parse(a.str());
  auto f = Field::build(6);
  std::set<std::string> listed;
  for (const auto& z : j["zeros"]) listed.insert(z.get<std::string>());
  for (std::uint32_t x = 1; x < 64; ++x)
    if (f->multiplicativeOrder(Elem{x}) == 9) CHECK(listed.count(toHex(Elem{x})) == 1);
  CHECK(j["mod16"]["violations"].empty());
}

TEST_CASE("spectrum command", "[cli]") {
  TempDir dir;
  const auto path = (dir.path / "w.csv.gz").string();
  std::ostringstream os;
  CHECK(cmdSpectrum(6, 2, "0x20", quiet(), path, os) == 0);
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["bent"] == true);
  CHECK(j["maxAbs"] == 64);
  CHECK(j["minAbs"] == 64);
  CHECK(j["parsevalOk"] == true);
  CHECK(j["parseval"].size() == 3);

  gzFile gz = gzopen(path.c_str(), "rb");
  REQUIRE(gz);
  std::string text;
  char buf[1 << 14];
  for (int n; (n = gzread(gz, buf, sizeof buf)) > 0;) text.append(buf, n);
  gzclose(gz);
  CHECK(text.rfind("a,b,W\n0,1,64\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 3 * 4096);
  CHECK(text.find(",-64\n") != std::string::npos);

  std::ostringstream one;
  cmdSpectrum(6, 2, "1", quiet(), std::nullopt, one);
  const auto k = nlohmann::json::parse(one.str());
  CHECK(k["bent"] == false);
  CHECK(k["maxAbs"] != 64);

  const auto plain = (dir.path / "w.csv").string();
  std::ostringstream again;
  cmdSpectrum(6, 2, "20", quiet(), plain, again);
  CHECK(slurp(plain) == text);
}

TEST_CASE("field-info", "[cli]") {
  std::ostringstream os;
  cmdFieldInfo(6, std::nullopt, quiet(), os);
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["modulus"] == "43");
  CHECK(j["generator"] == "2");
  CHECK(j["subfields"].size() == 4);
  std::ostringstream sub;
  cmdFieldInfo(6, 2u, quiet(), sub);
  const auto s = nlohmann::json::parse(sub.str());
  REQUIRE(s["subfields"].size() == 1);
  CHECK(s["subfields"][0]["elements"].size() == 4);
}

TEST_CASE("modulus overrides", "[cli]") {
  RunConfig cfg = quiet();
  cfg.overrideModulus(0x11d);
  CHECK(cfg.field(8)->modulus() == 0x11d);
  CHECK(cfg.field(6)->modulus() == 0x43);
  CHECK_THROWS_AS(cfg.overrideModulus(0x15), UsageError);
  // the bent coefficient set depends on the modulus, its size does not
  RunConfig alt = quiet();
  alt.overrideModulus(0x1053);
  std::ostringstream os;
  cmdSearch(6, 2, alt, std::nullopt, os);
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["modulus"] == "1053");
  CHECK(j["coefficients"].size() == 6);
}

TEST_CASE("exit codes of the executable", "[cli]") {
  CHECK(run("verify thm4 --m 6") == 0);
  CHECK(run("verify example-m6k2 --format text --jobs 2") == 0);
  CHECK(run("verify thm9") == 2);
  CHECK(run("verify thm4 --m 5") == 2);
  CHECK(run("verify thm4 --m 2") == 1);
  CHECK(run("verify thm4 --bogus") == 2);
  CHECK(run("verify thm4 --jobs 0") == 2);
  CHECK(run("verify thm4 --format xml") == 2);
  CHECK(run("search --m 6 --k 4") == 2);
  CHECK(run("search --m 6 --k 2 --modulus 1055") == 2);  // reducible
  CHECK(run("spectrum --m 6 --k 2 --a 0") == 2);
  CHECK(run("") == 2);
  CHECK(run("field-info --m 12") == 0);
  CHECK(run("--help") == 0);
}

TEST_CASE("executable writes reports to --out and honours the cache env var", "[cli]") {
  TempDir dir;
  const auto out = (dir.path / "report.json").string();
  REQUIRE(run("verify thm6 --no-timing --out " + out) == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["claim"] == "thm6");
  CHECK(j["status"] == "verified");
  const auto cache = dir.path / "envcache";
  const std::string env = std::string(kCacheDirEnv) + "=" + cache.string() + " ";
  REQUIRE(std::system((env + DILLON_EXE + " kloosterman --m 5 >/dev/null").c_str()) == 0);
  CHECK(fs::exists(cache / cacheFileName(*Field::build(5))));
}
