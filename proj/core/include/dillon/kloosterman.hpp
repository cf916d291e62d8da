// Kloosterman sums over GF(2^m), realized as a subfield of some ambient
// field (the whole field when the ambient degree is m).
//
//   K(a) = 1 + sum_{x != 0} (-1)^Tr(1/x + a x)
//
// Setting 1/0 := 0 folds the leading 1 into the x = 0 term, so the full
// table is the Walsh transform of x -> (-1)^Tr(x^-1) and costs m 2^m.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dillon/gf2field.hpp"
#include "dillon/report.hpp"

namespace dillon {

/// Direct evaluation of the defining sum. `a` must lie in `fm`.
std::int64_t kloostermanSum(const Subfield& fm, Elem a);

class KloostermanTable {
 public:
  /// Every K(a), a in `fm`, through one Walsh-Hadamard transform.
  static KloostermanTable build(const Subfield& fm, unsigned jobs = 1);
  /// Wraps precomputed values indexed by coordinates of `fm`.
  KloostermanTable(Subfield fm, std::vector<std::int32_t> valuesByCoords);

  unsigned degree() const { return field_.degree(); }
  const Subfield& field() const { return field_; }
  std::int32_t value(Elem a) const { return values_[field_.coords(a)]; }
  std::span<const std::int32_t> valuesByCoords() const { return values_; }

  /// (element, K) sorted by element mask.
  std::vector<std::pair<Elem, std::int32_t>> entries() const;
  /// Nonzero a with K(a) = 0, sorted. K(0) = 0 always and is not listed.
  std::vector<Elem> zeros() const;
  /// Cosets a * GF(2^k)^* of `fm` whose members are all zeros, each sorted,
  /// listed by smallest member.
  std::vector<std::vector<Elem>> allZeroCosets(unsigned k) const;

 private:
  Subfield field_;
  std::vector<std::int32_t> values_;
};

/// T(a) = 0 and S(a) = 0 over GF(2^m); every a with 16 | K(a) satisfies
/// it. Requires m >= 4 (std::invalid_argument) and a != 0 (std::domain_error).
/// Not sufficient for 16 | K(a).
bool mod16Necessary(const Subfield& fm, Elem a);

/// True iff every u in a * GF(2^k)^* is a Kloosterman zero of `fm`. Filters
/// each member through mod16Necessary (when m >= 4) before exact sums.
bool cosetAllZeros(const Subfield& fm, Elem a, unsigned k);
bool cosetAllZeros(const KloostermanTable& table, Elem a, unsigned k);

/// For every 2 <= m <= maxM and every a != 0 in a proper subfield of
/// GF(2^m): K_{2^m}(a) != 0, except (m, a) = (4, 1). Exceptions found are
/// listed as facts; anything else is a violation.
CheckOutcome checkSubfieldZeroTheorem(unsigned maxM, unsigned jobs = 1);

/// Mod-16 statistics of one table (a != 0): how many a pass the T = S = 0
/// filter, how many have 16 | K(a), how many are zeros.
struct Mod16Stats {
  std::uint64_t nonzeroElements = 0;
  std::uint64_t passFilter = 0;
  std::uint64_t divisibleBy16 = 0;
  std::uint64_t zeros = 0;
  /// a with 16 | K(a) but failing the filter; must stay empty.
  std::vector<Elem> violations;
};
Mod16Stats mod16Statistics(const KloostermanTable& table);

// CSV persistence: a metadata row "m=<m>,modulus=<hex>", the column header
// "element,K", then one "<hex>,<value>" row per element in mask order.
// Only whole-field tables are persisted.
void writeCsv(const KloostermanTable& table, std::ostream& out);
/// Throws std::runtime_error on malformed input or a field mismatch.
KloostermanTable readCsv(std::istream& in, const FieldPtr& field);
/// Content-addressed cache file name for a whole-field table.
std::string cacheFileName(const Field& field);

}  // namespace dillon
