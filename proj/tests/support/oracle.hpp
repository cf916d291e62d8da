// Slow, independent reference arithmetic for tests. Nothing here calls into
// the library: polynomials are multiplied bit by bit, traces are summed
// conjugate by conjugate, and character sums are taken straight from their
// definitions.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

inline int degree(std::uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; }

inline std::uint64_t polyMod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree(m);
  for (int d = degree(a); d >= dm; d = degree(a)) a ^= m << (d - dm);
  return a;
}

/// Irreducible iff no polynomial of degree 1..deg/2 divides it.
inline bool irreducibleByTrialDivision(std::uint64_t p) {
  const int n = degree(p);
  if (n < 1) return false;
  for (std::uint64_t q = 2; degree(q) <= n / 2; ++q)
    if (polyMod(p, q) == 0) return false;
  return true;
}

inline std::uint32_t smallestIrreducible(unsigned n) {
  for (std::uint64_t p = std::uint64_t{1} << n;; ++p)
    if (irreducibleByTrialDivision(p)) return static_cast<std::uint32_t>(p);
}

struct Field {
  unsigned n;
  std::uint32_t mod;

  std::uint32_t size() const { return 1u << n; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a >> n & 1) a ^= mod;
    }
    return r;
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (!a) throw std::domain_error("oracle inverse of zero");
    return pow(a, size() - 2);
  }

  std::uint32_t frob(std::uint32_t a, unsigned j) const {
    for (unsigned i = 0; i < j; ++i) a = mul(a, a);
    return a;
  }

  bool inSubfield(std::uint32_t a, unsigned k) const { return frob(a, k) == a; }

  /// Sum of the t conjugates a^(2^i), i < t, as a field element.
  std::uint32_t traceElem(std::uint32_t a, unsigned t) const {
    std::uint32_t s = 0;
    for (unsigned i = 0; i < t; ++i, a = mul(a, a)) s ^= a;
    return s;
  }

  int trace(std::uint32_t a, unsigned t) const {
    const auto s = traceElem(a, t);
    if (s > 1) throw std::logic_error("oracle trace outside GF(2)");
    return static_cast<int>(s);
  }
  int trace(std::uint32_t a) const { return trace(a, n); }

  /// Second elementary symmetric function of the t conjugates.
  int subtrace(std::uint32_t a, unsigned t) const {
    std::vector<std::uint32_t> c(t);
    for (unsigned i = 0; i < t; ++i, a = mul(a, a)) c[i] = a;
    std::uint32_t s = 0;
    for (unsigned i = 0; i < t; ++i)
      for (unsigned j = i + 1; j < t; ++j) s ^= mul(c[i], c[j]);
    if (s > 1) throw std::logic_error("oracle subtrace outside GF(2)");
    return static_cast<int>(s);
  }

  std::vector<int> traceTable() const {
    std::vector<int> t(size());
    for (std::uint32_t x = 0; x < size(); ++x) t[x] = trace(x);
    return t;
  }

  std::vector<std::uint32_t> inverseTable() const {
    std::vector<std::uint32_t> t(size(), 0);
    for (std::uint32_t x = 1; x < size(); ++x) t[x] = inv(x);
    return t;
  }

  std::uint32_t order(std::uint32_t a) const {
    std::uint32_t x = a, o = 1;
    while (x != 1) {
      x = mul(x, a);
      ++o;
    }
    return o;
  }
};

/// K(a) = sum over all x of (-1)^Tr(1/x + a x), with 1/0 = 0. Needs the
/// trace and inverse tables of f.
inline std::int64_t kloosterman(const Field& f, const std::vector<int>& tr, const std::vector<std::uint32_t>& inv,
                                std::uint32_t a) {
  std::int64_t s = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) s += (tr[inv[x]] ^ tr[f.mul(a, x)]) ? -1 : 1;
  return s;
}

/// W(a, b) = sum_x (-1)^(Tr^k(b f(x)) + Tr^n(a x)) straight from the
/// definition. Values f(x) are field elements of the k-subfield.
class Walsh {
 public:
  Walsh(const Field& f, unsigned k, std::vector<std::uint32_t> values)
      : f_(f), k_(k), values_(std::move(values)), trN_(f.traceTable()) {}

  std::int64_t operator()(std::uint32_t a, std::uint32_t b) const {
    std::int64_t s = 0;
    for (std::uint32_t x = 0; x < f_.size(); ++x)
      s += (f_.trace(f_.mul(b, values_[x]), k_) ^ trN_[f_.mul(a, x)]) ? -1 : 1;
    return s;
  }

  /// Every a for one component b.
  std::vector<std::int64_t> row(std::uint32_t b) const {
    std::vector<int> sign(f_.size());
    for (std::uint32_t x = 0; x < f_.size(); ++x) sign[x] = f_.trace(f_.mul(b, values_[x]), k_);
    std::vector<std::int64_t> out(f_.size());
    for (std::uint32_t a = 0; a < f_.size(); ++a) {
      std::int64_t s = 0;
      for (std::uint32_t x = 0; x < f_.size(); ++x) s += (sign[x] ^ trN_[f_.mul(a, x)]) ? -1 : 1;
      out[a] = s;
    }
    return out;
  }

 private:
  const Field& f_;
  unsigned k_;
  std::vector<std::uint32_t> values_;
  std::vector<int> trN_;
};

}  // namespace oracle
