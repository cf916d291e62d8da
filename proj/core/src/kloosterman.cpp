#include "dillon/kloosterman.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "dillon/parallel.hpp"
#include "dillon/walsh.hpp"

namespace dillon {

namespace {

void requireMember(const Subfield& fm, Elem a) {
  if (!fm.contains(a))
    throw std::invalid_argument("0x" + toHex(a) + " is not in GF(2^" + std::to_string(fm.degree()) + ")");
}

}  // namespace

std::int64_t kloostermanSum(const Subfield& fm, Elem a) {
  requireMember(fm, a);
  const Field& f = fm.field();
  std::int64_t sum = 1;
  for (Elem x : fm.elementsByCoords()) {
    if (x.isZero()) continue;
    sum += fm.trace(f.inv(x) + f.mul(a, x)) ? -1 : 1;
  }
  return sum;
}

KloostermanTable::KloostermanTable(Subfield fm, std::vector<std::int32_t> valuesByCoords)
    : field_(std::move(fm)), values_(std::move(valuesByCoords)) {
  if (values_.size() != field_.size()) throw std::invalid_argument("table size does not match the field");
}

KloostermanTable KloostermanTable::build(const Subfield& fm, unsigned jobs) {
  const Field& f = fm.field();
  const auto elems = fm.elementsByCoords();
  std::vector<std::int32_t> signs(elems.size());
  signs[0] = 1;
  parallelFor(elems.size() - 1, jobs, [&](std::size_t i) {
    const Elem x = elems[i + 1];
    signs[i + 1] = fm.trace(f.inv(x)) ? -1 : 1;
  });
  fwhtInPlace(signs);

  // signs[w] now holds K(a) for the a whose dual coordinates are w.
  const auto dual = dualBasisOf(fm);
  const auto aOfW = spanByCoords(dual.dual);
  std::vector<std::int32_t> values(elems.size());
  for (std::size_t w = 0; w < aOfW.size(); ++w) values[fm.coords(aOfW[w])] = signs[w];
  return KloostermanTable(fm, std::move(values));
}

std::vector<std::pair<Elem, std::int32_t>> KloostermanTable::entries() const {
  const auto elems = field_.elementsByCoords();
  std::vector<std::pair<Elem, std::int32_t>> out(elems.size());
  for (std::size_t c = 0; c < elems.size(); ++c) out[c] = {elems[c], values_[c]};
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> KloostermanTable::zeros() const {
  std::vector<Elem> out;
  for (const auto& [a, v] : entries())
    if (!a.isZero() && v == 0) out.push_back(a);
  return out;
}

std::vector<std::vector<Elem>> KloostermanTable::allZeroCosets(unsigned k) const {
  const Field& f = field_.field();
  if (field_.degree() % k != 0) throw std::invalid_argument("coset subfield degree must divide m");
  const std::uint32_t step = (field_.size() - 1) / ((1u << k) - 1);
  std::vector<std::vector<Elem>> out;
  Elem rep = kOne;
  for (std::uint32_t j = 0; j < step; ++j) {
    if (cosetAllZeros(*this, rep, k)) out.push_back(f.cosetOfSubfieldStar(rep, k));
    rep = f.mul(rep, field_.primitive());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool mod16Necessary(const Subfield& fm, Elem a) {
  const unsigned m = fm.degree();
  if (m < 4) throw std::invalid_argument("the mod-16 condition needs m >= 4, got m=" + std::to_string(m));
  if (a.isZero()) throw std::domain_error("the mod-16 condition is stated for a != 0");
  requireMember(fm, a);
  const Field& f = fm.field();
  return f.absoluteTrace(a, m) == 0 && f.subtrace(a, m) == 0;
}

bool cosetAllZeros(const Subfield& fm, Elem a, unsigned k) {
  if (a.isZero()) throw std::domain_error("coset of zero");
  requireMember(fm, a);
  if (fm.degree() % k != 0) throw std::invalid_argument("coset subfield degree must divide m");
  const auto coset = fm.field().cosetOfSubfieldStar(a, k);
  if (fm.degree() >= 4) {
    for (Elem u : coset)
      if (!mod16Necessary(fm, u)) return false;
  }
  for (Elem u : coset)
    if (kloostermanSum(fm, u) != 0) return false;
  return true;
}

bool cosetAllZeros(const KloostermanTable& table, Elem a, unsigned k) {
  const Subfield& fm = table.field();
  if (a.isZero()) throw std::domain_error("coset of zero");
  requireMember(fm, a);
  if (fm.degree() % k != 0) throw std::invalid_argument("coset subfield degree must divide m");
  for (Elem u : fm.field().cosetOfSubfieldStar(a, k))
    if (table.value(u) != 0) return false;
  return true;
}

CheckOutcome checkSubfieldZeroTheorem(unsigned maxM, unsigned jobs) {
  if (maxM > 20) throw std::invalid_argument("subfield-zero sweep is limited to m <= 20");
  Stopwatch clock;
  CheckOutcome out;
  out.id = "subfield-zeros";
  out.domain = "2 <= m <= " + std::to_string(maxM) + ", a in proper subfields of GF(2^m), a != 0";
  std::vector<std::string> exceptions;
  for (unsigned m = 2; m <= maxM; ++m) {
    auto field = Field::build(m);
    const Subfield whole(field, m);
    const auto table = KloostermanTable::build(whole, jobs);
    std::set<Elem> candidates;
    for (unsigned k = 1; k < m; ++k) {
      if (m % k != 0) continue;
      for (Elem a : field->subfieldElements(k))
        if (!a.isZero()) candidates.insert(a);
    }
    for (Elem a : candidates) {
      ++out.examined;
      if (table.value(a) != 0) continue;
      const std::string where = "m=" + std::to_string(m) + " a=" + toHex(a);
      if (m == 4 && a == kOne)
        exceptions.push_back(where);
      else
        out.violations.push_back(where);
    }
  }
  std::string joined;
  for (const auto& e : exceptions) joined += (joined.empty() ? "" : "; ") + e;
  out.fact("exceptions", joined.empty() ? "none" : joined);
  out.fact("exceptionCount", std::to_string(exceptions.size()));
  if (maxM >= 4 && exceptions.size() != 1) out.violations.push_back("expected exactly one exception (m=4, a=1)");
  out.elapsedMillis = clock.millis();
  return out;
}

Mod16Stats mod16Statistics(const KloostermanTable& table) {
  const Subfield& fm = table.field();
  Mod16Stats stats;
  for (const auto& [a, v] : table.entries()) {
    if (a.isZero()) continue;
    ++stats.nonzeroElements;
    const bool filter = mod16Necessary(fm, a);
    const bool div16 = v % 16 == 0;
    stats.passFilter += filter;
    stats.divisibleBy16 += div16;
    stats.zeros += v == 0;
    if (div16 && !filter) stats.violations.push_back(a);
  }
  return stats;
}

std::string cacheFileName(const Field& field) {
  const std::string key = "m=" + std::to_string(field.degree()) + ",modulus=" + toHex(std::uint64_t{field.modulus()});
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : key) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::string hex = toHex(h);
  hex.insert(0, 16 - hex.size(), '0');
  return "kloosterman-m" + std::to_string(field.degree()) + "-" + hex + ".csv";
}

void writeCsv(const KloostermanTable& table, std::ostream& out) {
  const Subfield& fm = table.field();
  if (!fm.isWholeField()) throw std::invalid_argument("only whole-field tables are persisted");
  out << "m=" << fm.degree() << ",modulus=" << toHex(std::uint64_t{fm.field().modulus()}) << "\n";
  out << "element,K\n";
  for (const auto& [a, v] : table.entries()) out << toHex(a) << "," << v << "\n";
}

KloostermanTable readCsv(std::istream& in, const FieldPtr& field) {
  std::string line;
  const std::string meta = "m=" + std::to_string(field->degree()) + ",modulus=" + toHex(std::uint64_t{field->modulus()});
  if (!std::getline(in, line) || line != meta) throw std::runtime_error("table metadata does not match " + meta);
  if (!std::getline(in, line) || line != "element,K") throw std::runtime_error("missing table column header");
  const Subfield whole(field, field->degree());
  std::vector<std::int32_t> values(whole.size());
  std::vector<bool> seen(whole.size(), false);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("malformed table row: " + line);
    const std::uint64_t a = parseHex(line.substr(0, comma));
    if (a >= whole.size() || seen[a]) throw std::runtime_error("bad or repeated element in row: " + line);
    seen[a] = true;
    values[a] = static_cast<std::int32_t>(std::stol(line.substr(comma + 1)));
    ++rows;
  }
  if (rows != whole.size()) throw std::runtime_error("table has " + std::to_string(rows) + " rows, expected " + std::to_string(whole.size()));
  return KloostermanTable(whole, std::move(values));
}

}  // namespace dillon
