#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "dillon/kloosterman.hpp"
#include "oracle.hpp"

using namespace dillon;

namespace {

struct OracleTable {
  oracle::Field f;
  std::vector<std::int64_t> k;  // indexed by element mask

  explicit OracleTable(const Field& field) : f{field.degree(), field.modulus()} {
    const auto tr = f.traceTable();
    const auto inv = f.inverseTable();
    k.resize(f.size());
    for (std::uint32_t a = 0; a < f.size(); ++a) k[a] = oracle::kloosterman(f, tr, inv, a);
  }
};

}  // namespace

TEST_CASE("FWHT table equals the defining sum", "[kloosterman]") {
  for (unsigned m = 1; m <= 11; ++m) {
    auto field = Field::build(m);
    const OracleTable o(*field);
    const auto table = KloostermanTable::build(Subfield(field, m));
    for (std::uint32_t a = 0; a < field->size(); ++a) REQUIRE(table.value(Elem{a}) == o.k[a]);
    if (m <= 8)
      for (std::uint32_t a = 0; a < field->size(); ++a) REQUIRE(kloostermanSum(Subfield(field, m), Elem{a}) == o.k[a]);
  }
}

TEST_CASE("zero counts for small fields", "[kloosterman]") {
  const std::size_t counts[] = {2, 3, 5, 5, 12, 14, 16};
  for (unsigned m = 2; m <= 8; ++m)
    CHECK(KloostermanTable::build(Subfield(Field::build(m), m)).zeros().size() == counts[m - 2]);
  const auto z4 = KloostermanTable::build(Subfield(Field::build(4), 4)).zeros();
  CHECK(z4 == std::vector<Elem>{Elem{1}, Elem{2}, Elem{3}, Elem{4}, Elem{5}});
}

TEST_CASE("known values", "[kloosterman]") {
  auto f4 = Field::build(4);
  auto f6 = Field::build(6);
  CHECK(kloostermanSum(Subfield(f4, 4), kOne) == 0);
  CHECK(kloostermanSum(Subfield(f6, 6), kOne) == -8);
  CHECK(kloostermanSum(Subfield(f6, 6), kZero) == 0);  // sum of (-1)^Tr(1/x) over all x
}

// The Weil bound holds for the sum over nonzero x, which is K(a) - 1 here.
TEST_CASE("table values obey divisibility, Weil and Frobenius invariance", "[kloosterman][property]") {
  for (unsigned m = 2; m <= 14; ++m) {
    auto field = Field::build(m);
    const auto table = KloostermanTable::build(Subfield(field, m));
    const double weil = std::pow(2.0, m / 2.0 + 1);
    for (const auto& [a, v] : table.entries()) {
      if (a.isZero()) continue;
      REQUIRE(v % 4 == 0);
      REQUIRE(std::abs(static_cast<double>(v - 1)) < weil);
      REQUIRE(table.value(field->square(a)) == v);
    }
  }
}

TEST_CASE("the Weil envelope does not hold for K(a) itself", "[kloosterman]") {
  auto field = Field::build(5);
  const auto table = KloostermanTable::build(Subfield(field, 5));
  std::int32_t largest = 0;
  for (const auto& [a, v] : table.entries()) largest = std::max(largest, v);
  CHECK(largest == 12);
  CHECK(largest > std::pow(2.0, 3.5));
}

TEST_CASE("table over a subfield of a larger ambient field", "[kloosterman]") {
  auto ambient = Field::build(12);
  const Subfield f4(ambient, 4);
  const auto table = KloostermanTable::build(f4);
  for (Elem a : f4.elements()) CHECK(table.value(a) == kloostermanSum(f4, a));
  CHECK(table.zeros().size() == 5);
  CHECK(table.value(kOne) == 0);
}

TEST_CASE("parallel table build is deterministic", "[kloosterman]") {
  const Subfield f(Field::build(13), 13);
  const auto one = KloostermanTable::build(f, 1);
  const auto four = KloostermanTable::build(f, 4);
  CHECK(std::equal(one.valuesByCoords().begin(), one.valuesByCoords().end(), four.valuesByCoords().begin()));
}

TEST_CASE("mod-16 filter is necessary for divisibility by 16", "[kloosterman][property]") {
  for (unsigned m = 4; m <= 10; ++m) {
    auto field = Field::build(m);
    const Subfield fm(field, m);
    const OracleTable o(*field);
    for (std::uint32_t a = 1; a < field->size(); ++a) {
      const bool filter = mod16Necessary(fm, Elem{a});
      REQUIRE(filter == (o.f.trace(a) == 0 && o.f.subtrace(a, m) == 0));
      if (o.k[a] % 16 == 0) REQUIRE(filter);
    }
  }
}

TEST_CASE("mod-16 filter domain errors", "[kloosterman]") {
  CHECK_THROWS_AS(mod16Necessary(Subfield(Field::build(3), 3), kOne), std::invalid_argument);
  CHECK_THROWS_AS(mod16Necessary(Subfield(Field::build(5), 5), kZero), std::domain_error);
}

TEST_CASE("mod-16 statistics", "[kloosterman]") {
  const auto s6 = mod16Statistics(KloostermanTable::build(Subfield(Field::build(6), 6)));
  CHECK(s6.nonzeroElements == 63);
  CHECK(s6.divisibleBy16 == 15);
  CHECK(s6.zeros == 12);
  CHECK(s6.violations.empty());
  CHECK(mod16Statistics(KloostermanTable::build(Subfield(Field::build(7), 7))).divisibleBy16 == 35);
  CHECK(mod16Statistics(KloostermanTable::build(Subfield(Field::build(8), 8))).divisibleBy16 == 55);
}

TEST_CASE("coset all-zero test agrees with the oracle", "[kloosterman]") {
  for (unsigned m : {4u, 6u, 8u, 9u, 10u}) {
    auto field = Field::build(m);
    const Subfield fm(field, m);
    const OracleTable o(*field);
    const auto table = KloostermanTable::build(fm);
    for (unsigned k = 1; k <= m; ++k) {
      if (m % k) continue;
      std::size_t allZero = 0;
      for (std::uint32_t a = 1; a < field->size(); ++a) {
        bool expected = true;
        for (Elem x : field->cosetOfSubfieldStar(Elem{a}, k)) expected = expected && o.k[x.bits()] == 0;
        REQUIRE(cosetAllZeros(table, Elem{a}, k) == expected);
        if (m >= 4 && a % 7 == 1) REQUIRE(cosetAllZeros(fm, Elem{a}, k) == expected);
        allZero += expected;
      }
      CHECK(table.allZeroCosets(k).size() * ((1u << k) - 1) == allZero);
    }
  }
}

TEST_CASE("m = 6 has two all-zero cosets of GF(4)*", "[kloosterman]") {
  const auto table = KloostermanTable::build(Subfield(Field::build(6), 6));
  const auto cosets = table.allZeroCosets(2);
  REQUIRE(cosets.size() == 2);
  auto f = Field::build(6);
  for (const auto& c : cosets)
    for (Elem a : c) CHECK(f->pow(a, 9) == kOne);
}

TEST_CASE("no Kloosterman zeros in proper subfields beyond K_16(1)", "[kloosterman]") {
  const auto c = checkSubfieldZeroTheorem(12, 2);
  CHECK(c.ok());
  CHECK(c.violations.empty());
  bool sawException = false;
  for (const auto& [k, v] : c.facts)
    if (k == "exceptions") sawException = v == "m=4 a=1";
  CHECK(sawException);
  CHECK_THROWS(checkSubfieldZeroTheorem(21));
}

TEST_CASE("CSV round trip is byte stable", "[kloosterman]") {
  auto field = Field::build(7);
  const auto table = KloostermanTable::build(Subfield(field, 7));
  std::ostringstream first;
  writeCsv(table, first);
  std::istringstream in(first.str());
  const auto back = readCsv(in, field);
  std::ostringstream second;
  writeCsv(back, second);
  CHECK(first.str() == second.str());
  CHECK(first.str().rfind("m=7,modulus=83\nelement,K\n0,", 0) == 0);
}

TEST_CASE("CSV reader rejects mismatched or damaged files", "[kloosterman]") {
  auto field = Field::build(5);
  std::ostringstream os;
  writeCsv(KloostermanTable::build(Subfield(field, 5)), os);
  std::istringstream wrongField(os.str());
  CHECK_THROWS(readCsv(wrongField, Field::build(5, 0x29u)));
  std::istringstream truncated(os.str().substr(0, os.str().size() / 2));
  CHECK_THROWS(readCsv(truncated, field));
  std::string tampered = os.str();
  tampered.replace(tampered.find("\n1,") + 3, 1, "x");
  std::istringstream bad(tampered);
  CHECK_THROWS(readCsv(bad, field));
}

TEST_CASE("only whole-field tables are persisted", "[kloosterman]") {
  std::ostringstream os;
  CHECK_THROWS(writeCsv(KloostermanTable::build(Subfield(Field::build(8), 4)), os));
}

TEST_CASE("cache file names depend on the field", "[kloosterman]") {
  const auto a = cacheFileName(*Field::build(8));
  const auto b = cacheFileName(*Field::build(8, 0x11du));
  CHECK(a != b);
  CHECK(a == cacheFileName(*Field::build(8)));
  CHECK(a.rfind("kloosterman-m8-", 0) == 0);
}
