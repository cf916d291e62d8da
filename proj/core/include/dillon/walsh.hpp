// Fast Walsh-Hadamard transform and the trace-dual basis that turns
// (-1)^Tr(a x) into (-1)^<w, c(x)> for bit vectors.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dillon/gf2field.hpp"

namespace dillon {

/// In-place unnormalized Walsh-Hadamard transform:
/// v[w] <- sum_c v[c] (-1)^popcount(w & c). Size must be a power of two.
void fwhtInPlace(std::span<std::int32_t> v);

/// A basis of a subfield GF(2^k) together with its dual under Tr^k_1:
/// Tr^k_1(primal[i] * dual[j]) = [i == j].
struct DualBasis {
  std::vector<Elem> primal;
  std::vector<Elem> dual;
};

/// Dual of the subfield's coordinate basis (the polynomial basis for the
/// whole field). Throws InvariantViolation if the trace form is singular.
DualBasis dualBasisOf(const Subfield& sub);
DualBasis dualBasisOf(const FieldPtr& field);
/// Dual basis of an arbitrary basis of the subfield.
DualBasis dualBasisOf(const Subfield& sub, std::span<const Elem> basis);

/// out[c] = sum_i c_i basis[i] for every c in [0, 2^|basis|).
std::vector<Elem> spanByCoords(std::span<const Elem> basis);

namespace gf2 {
/// Inverse of a square GF(2) matrix given as row bitmasks (bit j = column j).
/// Returns an empty vector if singular.
std::vector<std::uint32_t> invert(std::vector<std::uint32_t> rows);
}  // namespace gf2

}  // namespace dillon
