// Binary finite fields GF(2^n) in polynomial basis, with subfields realized
// as Frobenius fixed points of one ambient field.
//
// Elements are n-bit coefficient masks: bit i holds the coefficient of x^i.
// A Field is immutable after construction and is shared through
// std::shared_ptr<const Field>; every operation is a pure const member.

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dillon {

/// Raised when a value that must lie in {0, 1} (or a similar hard invariant)
/// does not. Never caught inside the library.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A field element as its polynomial-basis coefficient mask.
class Elem {
 public:
  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t bits) : bits_(bits) {}

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool isZero() const { return bits_ == 0; }

  friend constexpr Elem operator+(Elem a, Elem b) { return Elem{a.bits_ ^ b.bits_}; }
  constexpr Elem& operator+=(Elem o) {
    bits_ ^= o.bits_;
    return *this;
  }
  friend constexpr auto operator<=>(Elem, Elem) = default;

 private:
  std::uint32_t bits_ = 0;
};

inline constexpr Elem kZero{0};
inline constexpr Elem kOne{1};

/// Lowercase hex of the coefficient mask, no prefix.
std::string toHex(Elem x);
std::string toHex(std::uint64_t v);
/// Accepts an optional "0x" prefix. Throws std::invalid_argument on bad input.
std::uint64_t parseHex(const std::string& text);

namespace poly2 {
// Arithmetic on GF(2)[x] polynomials packed into 64-bit masks.
int degree(std::uint64_t p);
std::uint64_t mulMod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t mod(std::uint64_t a, std::uint64_t m);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
/// Rabin's test: x^(2^n) = x mod p and gcd(x^(2^(n/q)) - x, p) = 1 for
/// every prime q | n.
bool isIrreducible(std::uint64_t p);
}  // namespace poly2

std::vector<std::uint64_t> primeFactors(std::uint64_t v);

class Field {
 public:
  static constexpr unsigned kMaxDegree = 24;
  static constexpr unsigned kDefaultLogTableThreshold = 20;

  /// Builds GF(2^n). Without a modulus, the smallest irreducible polynomial
  /// of degree n (as an integer mask) is used. The generator is the
  /// smallest-mask element of order 2^n - 1. Throws std::invalid_argument
  /// for n outside [1, 24] or a reducible / wrong-degree modulus.
  static std::shared_ptr<const Field> build(
      unsigned n, std::optional<std::uint32_t> modulus = std::nullopt,
      unsigned logTableThreshold = kDefaultLogTableThreshold);

  static std::uint32_t defaultModulus(unsigned n);

  unsigned degree() const { return n_; }
  std::uint32_t modulus() const { return modulus_; }
  Elem generator() const { return generator_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }
  std::uint32_t groupOrder() const { return static_cast<std::uint32_t>(size() - 1); }
  bool hasLogTables() const { return !log_.empty(); }
  bool contains(Elem x) const { return x.bits() < size(); }

  Elem add(Elem a, Elem b) const { return a + b; }
  Elem mul(Elem a, Elem b) const;
  Elem square(Elem a) const { return mul(a, a); }
  /// Throws std::domain_error for x = 0.
  Elem inv(Elem x) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// Negative exponents invert; the exponent is reduced mod 2^n - 1 for a
  /// nonzero base. 0^0 = 1, 0^e = 0 for e > 0, 0^e throws for e < 0.
  Elem pow(Elem x, std::int64_t e) const;
  /// x^(2^j), j reduced mod n.
  Elem frobenius(Elem x, std::int64_t j) const;

  /// Tr^n_1 through a precomputed linear functional.
  unsigned trace(Elem x) const { return static_cast<unsigned>(__builtin_parity(x.bits() & traceMask_)); }
  std::uint32_t traceMask() const { return traceMask_; }

  /// Tr^s_t(x) = sum_{i < s/t} x^(2^(it)). Requires s | n, t | s and x in
  /// the subfield of order 2^s.
  Elem relativeTrace(Elem x, unsigned s, unsigned t) const;
  /// Sum_{0 <= i < t} a^(2^i) as a bit; a must lie in GF(2^t).
  unsigned absoluteTrace(Elem a, unsigned t) const;
  /// Sum_{0 <= i < j < t} a^(2^i + 2^j) as a bit; a must lie in GF(2^t).
  /// Throws InvariantViolation if the sum is not in GF(2).
  unsigned subtrace(Elem a, unsigned t) const;

  /// Requires log tables and x != 0.
  std::uint32_t discreteLog(Elem x) const;
  std::uint32_t multiplicativeOrder(Elem x) const;

  bool isInSubfield(Elem x, unsigned k) const;
  /// {0} together with the powers g^(i (2^n-1)/(2^k-1)), sorted by mask.
  std::vector<Elem> subfieldElements(unsigned k) const;
  /// The coset a * GF(2^k)^*, sorted by mask. Throws std::domain_error for a = 0.
  std::vector<Elem> cosetOfSubfieldStar(Elem a, unsigned k) const;
  /// Generator of GF(2^k)^*: g^((2^n-1)/(2^k-1)).
  Elem subfieldGenerator(unsigned k) const;

  void requireDivisor(unsigned k) const;
  void requireElement(Elem x) const;

  Field(unsigned n, std::uint32_t modulus, unsigned logTableThreshold);

 private:
  Elem mulReduce(Elem a, Elem b) const;
  Elem invEuclid(Elem x) const;

  unsigned n_;
  std::uint32_t modulus_;
  Elem generator_;
  std::uint32_t traceMask_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> antilog_;  // doubled, so log a + log b needs no reduction
};

using FieldPtr = std::shared_ptr<const Field>;

/// GF(2^k) inside an ambient field, with coordinates in a fixed GF(2) basis.
/// The basis is the polynomial basis when k equals the ambient degree and
/// {h^0, ..., h^(k-1)} for the subfield generator h otherwise.
class Subfield {
 public:
  Subfield(FieldPtr ambient, unsigned k);

  const Field& field() const { return *field_; }
  const FieldPtr& fieldPtr() const { return field_; }
  unsigned degree() const { return k_; }
  std::uint32_t size() const { return std::uint32_t{1} << k_; }
  bool isWholeField() const { return k_ == field_->degree(); }
  Elem primitive() const { return primitive_; }
  std::span<const Elem> basis() const { return basis_; }

  bool contains(Elem x) const { return field_->isInSubfield(x, k_); }
  /// Element with the given k-bit coordinate vector.
  Elem fromCoords(std::uint32_t coords) const;
  /// Coordinates of a subfield element. Throws std::invalid_argument if x is
  /// not in the subfield.
  std::uint32_t coords(Elem x) const;
  /// Tr^k_1 of a subfield element.
  unsigned trace(Elem x) const { return static_cast<unsigned>(__builtin_parity(coords(x) & traceMask_)); }
  /// Mask w with Tr^k_1(b y) = parity(coords(y) & w) for every subfield y.
  std::uint32_t traceMaskFor(Elem b) const;

  /// All 2^k elements sorted by ambient mask.
  std::vector<Elem> elements() const;
  /// All 2^k elements indexed by coordinate vector.
  std::vector<Elem> elementsByCoords() const;

 private:
  FieldPtr field_;
  unsigned k_;
  Elem primitive_;
  std::vector<Elem> basis_;
  struct EchelonRow {
    std::uint32_t vec;     // leading bit distinct across rows
    std::uint32_t coords;  // basis combination producing vec
  };
  std::vector<EchelonRow> rows_;  // decreasing leading bit
  std::uint32_t traceMask_ = 0;
};

}  // namespace dillon
