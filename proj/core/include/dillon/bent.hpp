// Vectorial Boolean maps GF(2^n) -> GF(2^k), their Walsh spectra, and the
// Dillon monomials f(x) = Tr^{2m}_k(a x^(2^m - 1)).
//
// W_f(a, b) = sum_x (-1)^(Tr^k_1(b f(x)) + Tr^n_1(a x)),  b != 0.
//
// The fast path builds the sign vector of each component b, runs one FWHT,
// and reads W_f(a, b) at the dual-basis coordinates of a.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dillon/gf2field.hpp"
#include "dillon/kloosterman.hpp"

namespace dillon {

/// Truth table of a map from the whole ambient field to one of its
/// subfields. Entry x (indexed by mask) holds the codomain coordinates of
/// f(x); spectra never depend on that encoding.
class BooleanMap {
 public:
  BooleanMap(FieldPtr domain, Subfield codomain, std::vector<std::uint32_t> table);
  static BooleanMap zero(FieldPtr domain, unsigned k);

  unsigned inputDegree() const { return domain_->degree(); }
  unsigned outputDegree() const { return codomain_.degree(); }
  const Field& domain() const { return *domain_; }
  const FieldPtr& domainPtr() const { return domain_; }
  const Subfield& codomain() const { return codomain_; }
  std::span<const std::uint32_t> table() const { return table_; }
  Elem valueAt(Elem x) const { return codomain_.fromCoords(table_[x.bits()]); }

  /// x -> f(x^d).
  BooleanMap composeWithPower(std::uint32_t d) const;

 private:
  FieldPtr domain_;
  Subfield codomain_;
  std::vector<std::uint32_t> table_;
};

struct WalshSpectrum {
  unsigned n = 0;
  unsigned k = 0;
  std::vector<Elem> components;                     // nonzero b, sorted
  std::vector<std::vector<std::int32_t>> values;    // values[i][a] = W(a, components[i])
  std::int64_t maxAbs = 0;
  std::int64_t minAbs = 0;
  bool isBent = false;

  std::int32_t at(Elem a, Elem b) const;
};

/// Defining sum, one (a, b). b must be a nonzero codomain element.
std::int64_t walshTransformDirect(const BooleanMap& f, Elem a, Elem b);
/// W(., b) indexed by the mask of a.
std::vector<std::int32_t> componentSpectrum(const BooleanMap& f, Elem b);
/// All components; memory is (2^k - 1) 2^n values. Requires n <= 20.
WalshSpectrum fullWalshSpectrum(const BooleanMap& f, unsigned jobs = 1);
/// Requires n even (std::invalid_argument). Stops at the first violation.
bool isBent(const BooleanMap& f);

/// One representative (the smallest) of every cyclotomic coset
/// {d 2^i mod 2^n - 1} with gcd(d, 2^n - 1) = 1.
std::vector<std::uint32_t> unitCyclotomicRepresentatives(unsigned n);
/// f(x^d) bent for every unit exponent d, one d per cyclotomic coset.
/// Requires n <= 12.
bool isHyperbentDirect(const BooleanMap& f);

/// K_{2^m}(a) = 0, i.e. Tr^{2m}_1(a x^(2^m - 1)) is hyperbent. Filters with
/// the mod-16 condition when m >= 4, then confirms with the exact sum.
bool isHyperbentDillonScalar(const Subfield& fm, Elem a);

struct DillonMonomial {
  unsigned m = 0;
  unsigned k = 0;
  Elem a;  // normalized into GF(2^m)^*
};

struct SearchResult {
  unsigned m = 0;
  unsigned k = 0;
  std::vector<Elem> coefficients;           // all bent a in GF(2^m)^*, sorted
  std::vector<std::vector<Elem>> cosets;    // bent cosets, each sorted
  std::uint64_t cosetsTested = 0;
  std::uint64_t cosetsPassingFilter = 0;
};

/// The family Tr^{2m}_k(a x^(2^m - 1)) over one ambient GF(2^{2m}); GF(2^m)
/// and GF(2^k) are its Frobenius-fixed subfields.
class DillonFamily {
 public:
  DillonFamily(unsigned m, unsigned k, std::optional<std::uint32_t> modulus = std::nullopt);
  DillonFamily(FieldPtr ambient, unsigned k);

  unsigned m() const { return m_; }
  unsigned k() const { return k_; }
  const FieldPtr& ambient() const { return ambient_; }
  const Subfield& coefficientField() const { return coeff_; }
  const Subfield& outputField() const { return out_; }

  /// Truth table over the ambient field; any nonzero ambient a is accepted.
  BooleanMap evaluate(Elem a) const;
  /// sqrt(a^(2^m + 1)): the GF(2^m)^* part of a. Bentness is unchanged.
  Elem normalize(Elem a) const;
  DillonMonomial monomial(Elem a) const { return {m_, k_, normalize(a)}; }
  /// Coset criterion. `a` must be a nonzero element of GF(2^m).
  bool isBentViaCoset(Elem a) const;
  /// Full spectrum route.
  bool isBentDirect(Elem a) const { return isBent(evaluate(a)); }
  /// Every bent a in GF(2^m)^*, one coset test per coset of GF(2^k)^*.
  SearchResult search(unsigned jobs = 1) const;

 private:
  FieldPtr ambient_;
  unsigned m_;
  unsigned k_;
  Subfield coeff_;
  Subfield out_;
};

}  // namespace dillon
