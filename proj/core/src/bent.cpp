#include "dillon/bent.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "dillon/parallel.hpp"
#include "dillon/walsh.hpp"

namespace dillon {

namespace {

void requireNonzeroComponent(const BooleanMap& f, Elem b) {
  if (b.isZero()) throw std::invalid_argument("Walsh transform is defined for b != 0 only");
  if (!f.codomain().contains(b))
    throw std::invalid_argument("0x" + toHex(b) + " is not in the codomain GF(2^" + std::to_string(f.outputDegree()) + ")");
}

std::vector<std::int32_t> componentSigns(const BooleanMap& f, Elem b) {
  const std::uint32_t mask = f.codomain().traceMaskFor(b);
  const auto table = f.table();
  std::vector<std::int32_t> signs(table.size());
  for (std::size_t x = 0; x < table.size(); ++x) signs[x] = __builtin_parity(table[x] & mask) ? -1 : 1;
  return signs;
}

std::vector<Elem> nonzeroCodomain(const BooleanMap& f) {
  auto elems = f.codomain().elements();
  elems.erase(elems.begin());  // zero sorts first
  return elems;
}

}  // namespace

BooleanMap::BooleanMap(FieldPtr domain, Subfield codomain, std::vector<std::uint32_t> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (codomain_.fieldPtr() != domain_ &&
      (codomain_.field().degree() != domain_->degree() || codomain_.field().modulus() != domain_->modulus()))
    throw std::invalid_argument("codomain must be a subfield of the domain field");
  if (table_.size() != domain_->size()) throw std::invalid_argument("truth table length must be 2^n");
  for (auto v : table_)
    if (v >= codomain_.size()) throw std::invalid_argument("truth table entry exceeds k bits");
}

BooleanMap BooleanMap::zero(FieldPtr domain, unsigned k) {
  Subfield codomain(domain, k);
  const auto size = domain->size();
  return BooleanMap(std::move(domain), std::move(codomain), std::vector<std::uint32_t>(size, 0));
}

BooleanMap BooleanMap::composeWithPower(std::uint32_t d) const {
  std::vector<std::uint32_t> t(table_.size());
  for (std::uint32_t x = 0; x < t.size(); ++x) t[x] = table_[domain_->pow(Elem{x}, d).bits()];
  return BooleanMap(domain_, codomain_, std::move(t));
}

std::int32_t WalshSpectrum::at(Elem a, Elem b) const {
  auto it = std::lower_bound(components.begin(), components.end(), b);
  if (it == components.end() || *it != b) throw std::invalid_argument("no spectrum component for b=0x" + toHex(b));
  return values[static_cast<std::size_t>(it - components.begin())].at(a.bits());
}

std::int64_t walshTransformDirect(const BooleanMap& f, Elem a, Elem b) {
  requireNonzeroComponent(f, b);
  const Field& F = f.domain();
  F.requireElement(a);
  const unsigned k = f.outputDegree();
  std::int64_t sum = 0;
  for (std::uint32_t x = 0; x < F.size(); ++x) {
    const unsigned bit = F.absoluteTrace(F.mul(b, f.valueAt(Elem{x})), k) ^ F.trace(F.mul(a, Elem{x}));
    sum += bit ? -1 : 1;
  }
  return sum;
}

std::vector<std::int32_t> componentSpectrum(const BooleanMap& f, Elem b) {
  requireNonzeroComponent(f, b);
  auto signs = componentSigns(f, b);
  fwhtInPlace(signs);
  const auto aOfW = spanByCoords(dualBasisOf(f.domainPtr()).dual);
  std::vector<std::int32_t> values(signs.size());
  for (std::size_t w = 0; w < signs.size(); ++w) values[aOfW[w].bits()] = signs[w];
  return values;
}

WalshSpectrum fullWalshSpectrum(const BooleanMap& f, unsigned jobs) {
  if (f.inputDegree() > 20) throw std::invalid_argument("full spectra are limited to n <= 20");
  WalshSpectrum s;
  s.n = f.inputDegree();
  s.k = f.outputDegree();
  s.components = nonzeroCodomain(f);
  s.values.resize(s.components.size());
  const auto aOfW = spanByCoords(dualBasisOf(f.domainPtr()).dual);
  parallelFor(s.components.size(), jobs, [&](std::size_t i) {
    auto signs = componentSigns(f, s.components[i]);
    fwhtInPlace(signs);
    auto& row = s.values[i];
    row.resize(signs.size());
    for (std::size_t w = 0; w < signs.size(); ++w) row[aOfW[w].bits()] = signs[w];
  });

  s.minAbs = std::numeric_limits<std::int64_t>::max();
  for (const auto& row : s.values) {
    for (auto v : row) {
      const std::int64_t a = std::abs(static_cast<std::int64_t>(v));
      s.maxAbs = std::max(s.maxAbs, a);
      s.minAbs = std::min(s.minAbs, a);
    }
  }
  if (s.values.empty()) s.minAbs = 0;
  s.isBent = s.n % 2 == 0 && !s.values.empty() && s.minAbs == s.maxAbs && s.maxAbs == (std::int64_t{1} << (s.n / 2));
  return s;
}

bool isBent(const BooleanMap& f) {
  const unsigned n = f.inputDegree();
  if (n % 2 != 0) throw std::invalid_argument("bentness needs an even input degree, got n=" + std::to_string(n));
  const std::int32_t target = std::int32_t{1} << (n / 2);
  for (Elem b : nonzeroCodomain(f)) {
    auto signs = componentSigns(f, b);
    fwhtInPlace(signs);
    for (auto v : signs)
      if (v != target && v != -target) return false;
  }
  return true;
}

std::vector<std::uint32_t> unitCyclotomicRepresentatives(unsigned n) {
  if (n < 1 || n > 24) throw std::invalid_argument("exponent modulus degree out of range");
  const std::uint32_t order = (std::uint32_t{1} << n) - 1;
  if (order == 1) return {1};
  std::vector<bool> seen(order, false);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t d = 1; d < order; ++d) {
    if (seen[d] || std::gcd(d, order) != 1) continue;
    reps.push_back(d);
    std::uint32_t e = d;
    do {
      seen[e] = true;
      e = static_cast<std::uint32_t>((std::uint64_t{e} * 2) % order);
    } while (e != d);
  }
  return reps;
}

bool isHyperbentDirect(const BooleanMap& f) {
  if (f.inputDegree() > 12) throw std::invalid_argument("direct hyperbent sweeps are limited to n <= 12");
  for (auto d : unitCyclotomicRepresentatives(f.inputDegree()))
    if (!isBent(f.composeWithPower(d))) return false;
  return true;
}

bool isHyperbentDillonScalar(const Subfield& fm, Elem a) {
  if (a.isZero()) throw std::domain_error("Dillon coefficient must be nonzero");
  if (!fm.contains(a)) throw std::invalid_argument("0x" + toHex(a) + " is not in GF(2^" + std::to_string(fm.degree()) + ")");
  if (fm.degree() >= 4 && !mod16Necessary(fm, a)) return false;
  return kloostermanSum(fm, a) == 0;
}

DillonFamily::DillonFamily(unsigned m, unsigned k, std::optional<std::uint32_t> modulus)
    : DillonFamily(Field::build(2 * m, modulus), k) {}

namespace {

FieldPtr dillonAmbient(FieldPtr ambient, unsigned k) {
  if (ambient->degree() % 2 != 0) throw std::invalid_argument("Dillon ambient field needs even degree 2m");
  const unsigned m = ambient->degree() / 2;
  if (k == 0 || m % k != 0) throw std::invalid_argument("k=" + std::to_string(k) + " must divide m=" + std::to_string(m));
  return ambient;
}

}  // namespace

DillonFamily::DillonFamily(FieldPtr ambient, unsigned k)
    : ambient_(dillonAmbient(std::move(ambient), k)),
      m_(ambient_->degree() / 2),
      k_(k),
      coeff_(ambient_, m_),
      out_(ambient_, k_) {}

BooleanMap DillonFamily::evaluate(Elem a) const {
  if (a.isZero()) throw std::domain_error("Dillon coefficient must be nonzero");
  const Field& F = *ambient_;
  F.requireElement(a);
  const std::int64_t e = (std::int64_t{1} << m_) - 1;
  std::vector<std::uint32_t> table(F.size());
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    const Elem y = F.mul(a, F.pow(Elem{x}, e));
    table[x] = out_.coords(F.relativeTrace(y, 2 * m_, k_));
  }
  return BooleanMap(ambient_, out_, std::move(table));
}

Elem DillonFamily::normalize(Elem a) const {
  if (a.isZero()) throw std::domain_error("Dillon coefficient must be nonzero");
  ambient_->requireElement(a);
  const Elem norm = ambient_->pow(a, (std::int64_t{1} << m_) + 1);
  return ambient_->frobenius(norm, -1);
}

bool DillonFamily::isBentViaCoset(Elem a) const {
  if (a.isZero()) throw std::domain_error("Dillon coefficient must be nonzero");
  if (!coeff_.contains(a))
    throw std::invalid_argument("0x" + toHex(a) + " is not in GF(2^" + std::to_string(m_) + "); normalize it first");
  return cosetAllZeros(coeff_, a, k_);
}

SearchResult DillonFamily::search(unsigned jobs) const {
  if (m_ > 12) throw std::invalid_argument("coefficient search is limited to m <= 12");
  const Field& F = *ambient_;
  const std::uint32_t step = (coeff_.size() - 1) / ((1u << k_) - 1);
  struct Slot {
    bool filter = true;
    bool bent = false;
  };
  std::vector<Slot> slots(step);
  parallelFor(step, jobs, [&](std::size_t j) {
    const Elem rep = F.pow(coeff_.primitive(), static_cast<std::int64_t>(j));
    const auto coset = F.cosetOfSubfieldStar(rep, k_);
    if (m_ >= 4) {
      for (Elem u : coset) {
        if (!mod16Necessary(coeff_, u)) {
          slots[j].filter = false;
          return;
        }
      }
    }
    slots[j].bent = std::all_of(coset.begin(), coset.end(), [&](Elem u) { return kloostermanSum(coeff_, u) == 0; });
  });

  SearchResult r;
  r.m = m_;
  r.k = k_;
  r.cosetsTested = step;
  for (std::uint32_t j = 0; j < step; ++j) {
    r.cosetsPassingFilter += slots[j].filter;
    if (!slots[j].bent) continue;
    auto coset = F.cosetOfSubfieldStar(F.pow(coeff_.primitive(), j), k_);
    r.coefficients.insert(r.coefficients.end(), coset.begin(), coset.end());
    r.cosets.push_back(std::move(coset));
  }
  std::sort(r.coefficients.begin(), r.coefficients.end());
  std::sort(r.cosets.begin(), r.cosets.end());
  return r;
}

}  // namespace dillon
