#include "dillon/walsh.hpp"

#include <bit>
#include <stdexcept>

namespace dillon {

void fwhtInPlace(std::span<std::int32_t> v) {
  const std::size_t size = v.size();
  if (!std::has_single_bit(size)) throw std::invalid_argument("transform length must be a power of two");
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t x = v[j];
        const std::int32_t y = v[j + h];
        v[j] = x + y;
        v[j + h] = x - y;
      }
    }
  }
}

namespace gf2 {

std::vector<std::uint32_t> invert(std::vector<std::uint32_t> rows) {
  const std::size_t n = rows.size();
  std::vector<std::uint32_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = 1u << i;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !(rows[pivot] >> col & 1)) ++pivot;
    if (pivot == n) return {};
    std::swap(rows[pivot], rows[col]);
    std::swap(inv[pivot], inv[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && (rows[r] >> col & 1)) {
        rows[r] ^= rows[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return inv;
}

}  // namespace gf2

DualBasis dualBasisOf(const Subfield& sub, std::span<const Elem> basis) {
  const Field& f = sub.field();
  const unsigned k = sub.degree();
  if (basis.size() != k) throw std::invalid_argument("basis size differs from subfield degree");
  std::vector<std::uint32_t> gram(k, 0);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j)
      gram[i] |= static_cast<std::uint32_t>(f.absoluteTrace(f.mul(basis[i], basis[j]), k)) << j;
  const auto inv = gf2::invert(gram);
  if (inv.empty()) throw InvariantViolation("trace form is singular on the given basis");

  // d_j = sum_l inv[l][j] e_l, so Tr(e_i d_j) = (G G^-1)_ij.
  DualBasis out{std::vector<Elem>(basis.begin(), basis.end()), std::vector<Elem>(k, kZero)};
  for (unsigned j = 0; j < k; ++j)
    for (unsigned l = 0; l < k; ++l)
      if (inv[l] >> j & 1) out.dual[j] += basis[l];
  return out;
}

DualBasis dualBasisOf(const Subfield& sub) { return dualBasisOf(sub, sub.basis()); }

DualBasis dualBasisOf(const FieldPtr& field) { return dualBasisOf(Subfield(field, field->degree())); }

std::vector<Elem> spanByCoords(std::span<const Elem> basis) {
  std::vector<Elem> out(std::size_t{1} << basis.size());
  for (std::size_t c = 1; c < out.size(); ++c) out[c] = out[c & (c - 1)] + basis[std::countr_zero(c)];
  return out;
}

}  // namespace dillon
