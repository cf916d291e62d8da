#include "claims.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "dillon/bent.hpp"
#include "dillon/kloosterman.hpp"
#include "dillon/walsh.hpp"
#include "dillon/witness.hpp"

namespace dillon::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> hexList(const std::vector<Elem>& elems) {
  std::vector<std::string> out;
  out.reserve(elems.size());
  for (Elem e : elems) out.push_back(toHex(e));
  return out;
}

std::vector<Elem> nonzeroElements(const Subfield& s) {
  auto e = s.elements();
  e.erase(e.begin());
  return e;
}

void requireRange(const char* flag, unsigned v, unsigned lo, unsigned hi) {
  if (v < lo || v > hi)
    throw UsageError(std::string(flag) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                     std::to_string(v));
}

json fieldJson(const Field& f) {
  return json{{"n", f.degree()}, {"modulus", toHex(std::uint64_t{f.modulus()})}, {"generator", toHex(f.generator())}};
}

// Non-existence sweep over Tr^{2m}_k: every a in GF(2^m)^* by the coset
// criterion, and by full spectra when 2m <= directLimit.
CheckOutcome nonExistenceSweep(const DillonFamily& fam, unsigned directLimit, json& detail) {
  Stopwatch clock;
  const bool direct = 2 * fam.m() <= directLimit;
  CheckOutcome c("no-bent-coefficient-m" + std::to_string(fam.m()) + "-k" + std::to_string(fam.k()),
                 "all a in GF(2^" + std::to_string(fam.m()) + ")^* inside GF(2^" + std::to_string(2 * fam.m()) + ")" +
                     (direct ? ", coset criterion and full spectra" : ", coset criterion"));
  std::uint64_t bent = 0;
  for (Elem a : nonzeroElements(fam.coefficientField())) {
    ++c.examined;
    const bool viaCoset = fam.isBentViaCoset(a);
    const bool viaSpectrum = direct ? fam.isBentDirect(a) : viaCoset;
    if (viaCoset != viaSpectrum) c.violations.push_back("a=" + toHex(a) + " criteria disagree");
    if (viaCoset || viaSpectrum) {
      ++bent;
      c.violations.push_back("a=" + toHex(a) + " is bent");
    }
  }
  c.fact("bentCount", std::to_string(bent));
  c.fact("route", direct ? "coset+spectrum" : "coset");
  detail[std::to_string(fam.m()) + "," + std::to_string(fam.k())] = json{{"field", fieldJson(*fam.ambient())}, {"bent", bent}};
  c.elapsedMillis = clock.millis();
  return c;
}

VerificationReport runThm1(const ClaimParams& p, const RunConfig& cfg) {
  Stopwatch clock;
  const unsigned maxM = p.m.value_or(16);
  requireRange("--m", maxM, 2, 20);
  VerificationReport r;
  r.claimId = "thm1";
  r.parameters = json{{"maxM", maxM}};
  r.add(checkSubfieldZeroTheorem(maxM, cfg.parallelism));
  r.finalize(clock.millis());
  return r;
}

VerificationReport runThm2(const ClaimParams& p, const RunConfig& cfg) {
  Stopwatch clock;
  const unsigned m = p.m.value_or(4);
  requireRange("--m", m, 1, 6);
  const DillonFamily fam(cfg.field(2 * m), 1);
  const Subfield& fm = fam.coefficientField();
  VerificationReport r;
  r.claimId = "thm2";
  r.parameters = json{{"m", m}};
  CheckOutcome c("hyperbent-iff-kloosterman-zero",
                 "all a in GF(2^" + std::to_string(m) + ")^*, substitutions x^d over unit cyclotomic cosets mod 2^" +
                     std::to_string(2 * m) + "-1");
  std::vector<Elem> hyperbent;
  for (Elem a : nonzeroElements(fm)) {
    ++c.examined;
    const bool direct = isHyperbentDirect(fam.evaluate(a));
    const bool scalar = isHyperbentDillonScalar(fm, a);
    if (direct != scalar) c.violations.push_back("a=" + toHex(a));
    if (direct) hyperbent.push_back(a);
  }
  c.fact("substitutionRepresentatives", std::to_string(unitCyclotomicRepresentatives(2 * m).size()));
  c.fact("hyperbentCount", std::to_string(hyperbent.size()));
  c.elapsedMillis = clock.millis();
  r.add(std::move(c));
  r.details = json{{"field", fieldJson(*fam.ambient())}, {"hyperbent", hexList(hyperbent)}};
  r.finalize(clock.millis());
  return r;
}

VerificationReport runThm3(const ClaimParams& p, const RunConfig& cfg) {
  Stopwatch clock;
  std::vector<unsigned> ms{2, 3, 4, 5, 6};
  if (p.m) {
    requireRange("--m", *p.m, 1, 12);
    ms = {*p.m};
  }
  VerificationReport r;
  r.claimId = "thm3";
  r.parameters = json{{"m", ms}, {"k", "m"}};
  for (unsigned m : ms) r.add(nonExistenceSweep(DillonFamily(cfg.field(2 * m), m), 12, r.details));
  r.finalize(clock.millis());
  return r;
}

VerificationReport runThm4(const ClaimParams& p, const RunConfig& cfg) {
  Stopwatch clock;
  std::vector<unsigned> ms{4, 6};
  if (p.m) {
    requireRange("--m", *p.m, 2, 12);
    if (*p.m % 2 != 0) throw UsageError("--m must be even for thm4");
    ms = {*p.m};
  }
  VerificationReport r;
  r.claimId = "thm4";
  r.parameters = json{{"m", ms}, {"k", "m/2"}};
  for (unsigned m : ms) r.add(nonExistenceSweep(DillonFamily(cfg.field(2 * m), m / 2), 12, r.details));
  r.finalize(clock.millis());
  return r;
}

VerificationReport runThm5(const ClaimParams& p, const RunConfig& cfg) {
  Stopwatch clock;
  const unsigned k = p.k.value_or(3);
  if (k < 3 || k % 2 == 0 || 3 * k > 20) throw UsageError("--k must be odd with 3 <= k and 3k <= 20");
  const unsigned m = 3 * k;
  VerificationReport r;
  r.claimId = "thm5";
  r.parameters = json{{"k", k}, {"m", m}, {"directWalsh", p.directWalsh}, {"sample", p.sample}};
  r.add(theoremFiveChain(k, cfg.parallelism));

  if (m <= 12) {
    Stopwatch searchClock;
    const DillonFamily fam(cfg.field(2 * m), k);
    const auto found = fam.search(cfg.parallelism);
    CheckOutcome c("coset-search-empty", "all cosets a GF(2^" + std::to_string(k) + ")^* in GF(2^" + std::to_string(m) +
                                             ")^* inside GF(2^" + std::to_string(2 * m) + ")");
    c.examined = found.cosetsTested;
    for (Elem a : found.coefficients) c.violations.push_back("a=" + toHex(a) + " is bent");
    c.fact("cosetsPassingFilter", std::to_string(found.cosetsPassingFilter));
    c.elapsedMillis = searchClock.millis();
    r.add(std::move(c));

    if (p.directWalsh) {
      if (2 * m > 20) throw UsageError("--direct-walsh needs 2m <= 20");
      Stopwatch walshClock;
      CheckOutcome d("direct-walsh-sample", std::to_string(p.sample) + " sampled a in GF(2^" + std::to_string(m) +
                                                ")^*, full spectra over GF(2^" + std::to_string(2 * m) + ")");
      auto pool = nonzeroElements(fam.coefficientField());
      std::mt19937_64 rng(0x5eed);
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(std::min<std::size_t>(pool.size(), p.sample));
      std::sort(pool.begin(), pool.end());
      for (Elem a : pool) {
        ++d.examined;
        if (fam.isBentDirect(a)) d.violations.push_back("a=" + toHex(a) + " is bent");
      }
      d.fact("sampled", [&] {
        std::string s;
        for (Elem a : pool) s += (s.empty() ? "" : " ") + toHex(a);
        return s.empty() ? std::string("none") : s;
      }());
      d.elapsedMillis = walshClock.millis();
      r.add(std::move(d));
    }
  } else if (p.directWalsh) {
    throw UsageError("--direct-walsh needs 2m <= 20");
  }
  r.finalize(clock.millis());
  return r;
}

VerificationReport runThm6(const ClaimParams& p, const RunConfig& cfg) {
  Stopwatch clock;
  const unsigned k = p.k.value_or(2);
  if (k != 2 && k != 4) throw UsageError("--k must be 2 or 4 for thm6");
  VerificationReport r;
  r.claimId = "thm6";
  r.parameters = json{{"k", k}, {"m", 3 * k}, {"condition", "a^" + std::to_string(3 * ((1u << k) - 1)) + " = 1"}};
  r.add(theoremSixCondition(k, cfg.parallelism));
  r.finalize(clock.millis());
  return r;
}

VerificationReport runProp3(const ClaimParams& p, const RunConfig& cfg) {
  Stopwatch clock;
  std::vector<std::pair<unsigned, unsigned>> pairs{{4, 2}, {6, 2}, {6, 3}, {6, 6}};
  if (p.m || p.k) {
    if (!p.m || !p.k) throw UsageError("prop3-equiv needs both --m and --k, or neither");
    requireRange("--m", *p.m, 1, 6);
    if (*p.k == 0 || *p.m % *p.k != 0) throw UsageError("--k must divide --m");
    pairs = {{*p.m, *p.k}};
  }
  VerificationReport r;
  r.claimId = "prop3-equiv";
  json pj = json::array();
  for (auto [m, k] : pairs) pj.push_back(json::array({m, k}));
  r.parameters = json{{"pairs", pj}};
  for (auto [m, k] : pairs) {
    Stopwatch pairClock;
    const DillonFamily fam(cfg.field(2 * m), k);
    CheckOutcome c("coset-criterion-equals-spectrum-m" + std::to_string(m) + "-k" + std::to_string(k),
                   "all a in GF(2^" + std::to_string(m) + ")^*, full spectra over GF(2^" + std::to_string(2 * m) + ")");
    std::vector<Elem> bent;
    for (Elem a : nonzeroElements(fam.coefficientField())) {
      ++c.examined;
      const bool direct = fam.isBentDirect(a);
      if (direct != fam.isBentViaCoset(a)) c.violations.push_back("a=" + toHex(a));
      if (direct) bent.push_back(a);
    }
    c.fact("bentCount", std::to_string(bent.size()));
    c.elapsedMillis = pairClock.millis();
    r.details[std::to_string(m) + "," + std::to_string(k)] = hexList(bent);
    r.add(std::move(c));
  }
  r.finalize(clock.millis());
  return r;
}

VerificationReport runProp4(const ClaimParams& p, const RunConfig& cfg) {
  Stopwatch clock;
  std::vector<unsigned> ms;
  for (unsigned m = 4; m <= 12; ++m) ms.push_back(m);
  if (p.m) {
    requireRange("--m", *p.m, 4, 20);
    ms = {*p.m};
  }
  VerificationReport r;
  r.claimId = "prop4";
  r.parameters = json{{"m", ms}};
  for (unsigned m : ms) {
    Stopwatch mClock;
    auto field = cfg.field(m);
    const auto table = KloostermanTable::build(Subfield(field, m), cfg.parallelism);
    const auto stats = mod16Statistics(table);
    CheckOutcome c("mod16-implies-trace-and-subtrace-m" + std::to_string(m),
                   "all a in GF(2^" + std::to_string(m) + ")^*");
    c.examined = stats.nonzeroElements;
    for (Elem a : stats.violations) c.violations.push_back("a=" + toHex(a));
    c.fact("passFilter", std::to_string(stats.passFilter));
    c.fact("divisibleBy16", std::to_string(stats.divisibleBy16));
    c.fact("zeros", std::to_string(stats.zeros));
    c.elapsedMillis = mClock.millis();
    r.add(std::move(c));
  }
  r.finalize(clock.millis());
  return r;
}

VerificationReport runExample(const ClaimParams&, const RunConfig& cfg) {
  Stopwatch clock;
  const DillonFamily fam(cfg.field(12), 2);
  const Field& f = *fam.ambient();
  VerificationReport r;
  r.claimId = "example-m6k2";
  r.parameters = json{{"m", 6}, {"k", 2}, {"field", fieldJson(f)}};

  std::vector<Elem> roots;  // a^6 + a^3 + 1 = 0 in GF(2^6)
  for (Elem a : nonzeroElements(fam.coefficientField()))
    if ((f.pow(a, 6) + f.pow(a, 3) + kOne).isZero()) roots.push_back(a);

  Stopwatch searchClock;
  const auto found = fam.search(cfg.parallelism);
  CheckOutcome search("search-equals-roots", "all a in GF(2^6)^*, coset criterion");
  search.examined = 63;
  if (found.coefficients != roots) search.violations.push_back("bent set differs from the roots of a^6 + a^3 + 1");
  if (roots.size() != 6) search.violations.push_back("expected six roots, found " + std::to_string(roots.size()));
  search.fact("bentCount", std::to_string(found.coefficients.size()));
  search.elapsedMillis = searchClock.millis();

  Stopwatch spectrumClock;
  CheckOutcome spectra("full-spectra-bent", "all a in GF(2^6)^*, every (a', b), b in GF(4)^*, |W| = 64");
  std::vector<Elem> directBent;
  for (Elem a : nonzeroElements(fam.coefficientField())) {
    ++spectra.examined;
    const auto s = fullWalshSpectrum(fam.evaluate(a), cfg.parallelism);
    for (std::size_t i = 0; i < s.components.size(); ++i) {
      std::int64_t parseval = 0;
      for (auto v : s.values[i]) parseval += std::int64_t{v} * v;
      if (parseval != (std::int64_t{1} << 24)) spectra.violations.push_back("Parseval a=" + toHex(a));
    }
    if (s.isBent) directBent.push_back(a);
  }
  if (directBent != roots) spectra.violations.push_back("spectrum-bent set differs from the roots");
  spectra.fact("bentCount", std::to_string(directBent.size()));
  spectra.elapsedMillis = spectrumClock.millis();

  r.add(std::move(search));
  r.add(std::move(spectra));
  r.details = json{{"coefficients", hexList(found.coefficients)}};
  r.finalize(clock.millis());
  return r;
}

VerificationReport runIdentities(const ClaimParams& p, const RunConfig&) {
  Stopwatch clock;
  std::vector<unsigned> rewriteKs{2, 3, 4};
  std::vector<unsigned> traceKs{2, 3};
  if (p.k) {
    requireRange("--k", *p.k, 2, 5);
    rewriteKs = {*p.k};
    traceKs = *p.k <= 4 ? std::vector<unsigned>{*p.k} : std::vector<unsigned>{};
  }
  VerificationReport r;
  r.claimId = "identities";
  r.parameters = json{{"rewriteK", rewriteKs}, {"traceK", traceKs}};
  for (unsigned k : rewriteKs) {
    r.add(verifyD1Rewrite(k));
    r.add(verifyFinitoIdentity(k));
  }
  for (unsigned k : traceKs) {
    for (auto& c : verifyTraceIdentities(k, ExponentConvention::kOneBased)) r.add(std::move(c));
    for (auto& c : verifyTraceIdentities(k, ExponentConvention::kZeroBased)) {
      c.id += "-zero-based";
      c.informational = true;
      r.add(std::move(c));
    }
  }
  r.finalize(clock.millis());
  return r;
}

}  // namespace

const std::vector<ClaimSpec>& claimRegistry() {
  static const std::vector<ClaimSpec> registry = {
      {"thm1", "no Kloosterman zeros in proper subfields except K_16(1) = 0", {"m"}, runThm1},
      {"thm2", "Tr^2m_1(a x^(2^m-1)) hyperbent iff K_2^m(a) = 0", {"m"}, runThm2},
      {"thm3", "Tr^2m_m(a x^(2^m-1)) is never bent", {"m"}, runThm3},
      {"thm4", "Tr^2m_(m/2)(a x^(2^m-1)) is never bent, m even", {"m"}, runThm4},
      {"thm5", "Tr^6k_k(a x^(2^3k-1)) is never bent for odd k >= 3", {"k", "direct-walsh", "sample"}, runThm5},
      {"thm6", "bent Tr^6k_k(a x^(2^3k-1)), k even, forces a^(3(2^k-1)) = 1", {"k"}, runThm6},
      {"prop3-equiv", "bent iff every element of a GF(2^k)^* is a Kloosterman zero", {"m", "k"}, runProp3},
      {"prop4", "16 | K(a) implies T(a) = S(a) = 0", {"m"}, runProp4},
      {"example-m6k2", "the bent coefficients for m = 6, k = 2 are the roots of a^6 + a^3 + 1", {}, runExample},
      {"identities", "C/D trace identities, the D_1 rewrite and the G + A^(2^k) C_1 identity", {"k"}, runIdentities},
  };
  return registry;
}

const ClaimSpec* findClaim(const std::string& id) {
  for (const auto& c : claimRegistry())
    if (c.id == id) return &c;
  return nullptr;
}

VerificationReport runClaim(const std::string& id, const ClaimParams& params, const RunConfig& config) {
  config.validate();
  const ClaimSpec* claim = findClaim(id);
  if (!claim) {
    std::string known;
    for (const auto& c : claimRegistry()) known += (known.empty() ? "" : ", ") + c.id;
    throw UsageError("unknown claim '" + id + "' (known: " + known + ")");
  }
  auto accepts = [&](const std::string& flag) {
    return std::find(claim->accepts.begin(), claim->accepts.end(), flag) != claim->accepts.end();
  };
  if (params.m && !accepts("m")) throw UsageError(id + " does not take --m");
  if (params.k && !accepts("k")) throw UsageError(id + " does not take --k");
  if ((params.directWalsh || params.sample) && !accepts("direct-walsh"))
    throw UsageError(id + " does not take --direct-walsh/--sample");
  if (params.directWalsh && params.sample == 0) throw UsageError("--direct-walsh needs --sample N with N >= 1");
  try {
    return claim->run(params, config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace dillon::cli
