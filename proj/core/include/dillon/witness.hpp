// Pointwise evaluation of the bivariate trace polynomials
//
//   C(A, u) = sum_{0 <= i < m}       A^(2^i)       u^(2^i mod (2^k - 1))
//   D(A, u) = sum_{0 <= i < j < m}   A^(2^i + 2^j) u^((2^i + 2^j) mod (2^k - 1))
//
// over GF(2^m), m = 3k, with u in GF(2^k), and the sweeps that check the
// non-existence argument for Tr^{2m}_k(a x^(2^m - 1)) link by link.

#pragma once

#include <cstdint>
#include <vector>

#include "dillon/gf2field.hpp"
#include "dillon/report.hpp"

namespace dillon {

/// How a positive exponent e is reduced modulo 2^k - 1.
enum class ExponentConvention {
  kOneBased,   // representative in [1, 2^k - 1]; monomials vanish at u = 0
  kZeroBased,  // representative in [0, 2^k - 2]
};

/// 2^s mod (2^k - 1) = 2^(s mod k).
std::uint32_t reduceExponent(std::uint64_t s, unsigned k);
/// Representative of e mod (2^k - 1) under the convention; e >= 1.
std::uint32_t reduceGeneral(std::uint64_t e, unsigned k,
                            ExponentConvention convention = ExponentConvention::kOneBased);

/// u-coefficients C_i(a) or D_i(a) of one polynomial, indexed by exponent
/// i in [0, 2^k - 1].
struct CoefficientVector {
  enum class Role { kC, kD };

  unsigned k = 0;
  Role role = Role::kC;
  std::vector<Elem> entries;

  Elem at(std::uint32_t exponent) const { return entries.at(exponent); }
  Elem evaluate(const Field& field, Elem u) const;
  bool isZero() const;
};

class TracePolynomials {
 public:
  /// `field` is GF(2^m) with k | m; u ranges over its subfield GF(2^k).
  TracePolynomials(FieldPtr field, unsigned k,
                   ExponentConvention convention = ExponentConvention::kOneBased);

  const Field& field() const { return *field_; }
  const FieldPtr& fieldPtr() const { return field_; }
  unsigned m() const { return field_->degree(); }
  unsigned k() const { return k_; }
  ExponentConvention convention() const { return convention_; }

  Elem evalC(Elem a, Elem u) const;
  Elem evalD(Elem a, Elem u) const;
  CoefficientVector coefficientsC(Elem a) const;
  CoefficientVector coefficientsD(Elem a) const;

  // Closed forms for m = 3k; std::invalid_argument otherwise.
  /// a + a^(2^k) + a^(2^2k)
  Elem closedC1(Elem a) const;
  /// sum_{1 <= i < j <= 3} a^(2^(ik-1) + 2^(jk-1))
  Elem closedD1(Elem a) const;
  /// a^(2^k + 1) + a^(2^2k + 1) + a^(2^2k + 2^k)
  Elem polyG(Elem a) const;

 private:
  void requireThreeK() const;

  FieldPtr field_;
  unsigned k_;
  ExponentConvention convention_;
};

// Exhaustive sweeps. Each returns one outcome per checked statement.

/// D_1(a) = G(a)^(2^(k-1)) and the vector entry D_1 matches the closed form,
/// for all a in GF(2^3k).
CheckOutcome verifyD1Rewrite(unsigned k);
/// G(a) + a^(2^k) C_1(a) = a^(2^k + 1) (a^(2^k - 1) + (a^(2^k - 1))^(2^k)),
/// for all a in GF(2^3k), plus the corollary C_1 = G = 0, a != 0 =>
/// a^(2^k - 1) in GF(2^k)^*. k in [2, 5].
CheckOutcome verifyFinitoIdentity(unsigned k);
/// C(b, z) = T(bz), D(b, z) = S(bz) for all b in GF(2^3k), z in GF(2^k);
/// coefficient vectors evaluate back to evalC / evalD; vanishing on GF(2^k)
/// forces a zero vector.
std::vector<CheckOutcome> verifyTraceIdentities(unsigned k,
                                                ExponentConvention convention = ExponentConvention::kOneBased);

/// The odd-k chain over GF(2^3k) (links L1..L5 plus the conclusion that
/// {a != 0 : C_1(a) = D_1(a) = 0} lies in GF(2^k)).
ChainReport theoremFiveChain(unsigned k, unsigned jobs = 1);
/// The even-k condition: C_1(a) = D_1(a) = 0 => a^(3(2^k - 1)) = 1 over
/// GF(2^3k), every bent coefficient of Tr^{6k}_k satisfies it, and a = 1
/// satisfies it without being bent. k in {2, 4}.
ChainReport theoremSixCondition(unsigned k, unsigned jobs = 1);

}  // namespace dillon
