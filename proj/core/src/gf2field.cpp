#include "dillon/gf2field.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace dillon {

std::string toHex(std::uint64_t v) {
  char buf[20];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, 16);
  return std::string(buf, res.ptr);
}

std::string toHex(Elem x) { return toHex(std::uint64_t{x.bits()}); }

std::uint64_t parseHex(const std::string& text) {
  std::string_view s = text;
  if (s.starts_with("0x") || s.starts_with("0X")) s.remove_prefix(2);
  std::uint64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument("not a hexadecimal value: '" + text + "'");
  return v;
}

namespace poly2 {

int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree(m);
  for (int d = degree(a); d >= dm; d = degree(a)) a ^= m << (d - dm);
  return a;
}

std::uint64_t mulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  a = mod(a, m);
  b = mod(b, m);
  std::uint64_t r = 0;
  const int dm = degree(m);
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> dm & 1) a ^= m;
  }
  return r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

bool isIrreducible(std::uint64_t p) {
  const int n = degree(p);
  if (n < 1) return false;
  if (n == 1) return true;
  // xPow[i] = x^(2^i) mod p
  std::vector<std::uint64_t> xPow(n + 1);
  xPow[0] = mod(0b10, p);
  for (int i = 1; i <= n; ++i) xPow[i] = mulMod(xPow[i - 1], xPow[i - 1], p);
  if (xPow[n] != xPow[0]) return false;
  for (auto q : primeFactors(static_cast<std::uint64_t>(n))) {
    if (gcd(xPow[n / q] ^ xPow[0], p) != 1) return false;
  }
  return true;
}

}  // namespace poly2

std::vector<std::uint64_t> primeFactors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint32_t Field::defaultModulus(unsigned n) {
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("field degree must be in [1, 24], got " + std::to_string(n));
  for (std::uint64_t p = std::uint64_t{1} << n; p < (std::uint64_t{2} << n); ++p)
    if (poly2::isIrreducible(p)) return static_cast<std::uint32_t>(p);
  throw InvariantViolation("no irreducible polynomial of degree " + std::to_string(n));
}

std::shared_ptr<const Field> Field::build(unsigned n, std::optional<std::uint32_t> modulus,
                                          unsigned logTableThreshold) {
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("field degree must be in [1, 24], got " + std::to_string(n));
  std::uint32_t m = 0;
  if (modulus) {
    m = *modulus;
    if (poly2::degree(m) != static_cast<int>(n))
      throw std::invalid_argument("modulus 0x" + toHex(std::uint64_t{m}) + " has degree " +
                                  std::to_string(poly2::degree(m)) + ", expected " + std::to_string(n));
    if (!poly2::isIrreducible(m))
      throw std::invalid_argument("modulus 0x" + toHex(std::uint64_t{m}) + " is reducible over GF(2)");
  } else {
    m = defaultModulus(n);
  }
  return std::make_shared<const Field>(n, m, logTableThreshold);
}

Field::Field(unsigned n, std::uint32_t modulus, unsigned logTableThreshold) : n_(n), modulus_(modulus) {
  const std::uint32_t order = groupOrder();
  const auto primes = primeFactors(order);
  for (std::uint32_t c = 1; c < size(); ++c) {
    Elem g{c};
    bool full = true;
    for (auto p : primes) {
      if (pow(g, order / p) == kOne) {
        full = false;
        break;
      }
    }
    if (full) {
      generator_ = g;
      break;
    }
  }

  if (n_ <= logTableThreshold) {
    log_.assign(size(), 0);
    antilog_.assign(2 * std::size_t{order}, 0);
    Elem x = kOne;
    for (std::uint32_t i = 0; i < order; ++i) {
      antilog_[i] = antilog_[i + order] = x.bits();
      log_[x.bits()] = i;
      x = mulReduce(x, generator_);
    }
  }

  for (unsigned i = 0; i < n_; ++i)
    traceMask_ |= static_cast<std::uint32_t>(absoluteTrace(Elem{1u << i}, n_)) << i;
}

Elem Field::mulReduce(Elem a, Elem b) const {
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  std::uint64_t r = 0;
  while (y) {
    if (y & 1) r ^= x;
    y >>= 1;
    x <<= 1;
  }
  for (int d = 2 * static_cast<int>(n_) - 2; d >= static_cast<int>(n_); --d)
    if (r >> d & 1) r ^= std::uint64_t{modulus_} << (d - n_);
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::mul(Elem a, Elem b) const {
  if (a.isZero() || b.isZero()) return kZero;
  if (!log_.empty()) return Elem{antilog_[log_[a.bits()] + log_[b.bits()]]};
  return mulReduce(a, b);
}

Elem Field::invEuclid(Elem x) const {
  std::uint64_t u = x.bits(), v = modulus_, g1 = 1, g2 = 0;
  while (u != 1) {
    int j = poly2::degree(u) - poly2::degree(v);
    if (j < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      j = -j;
    }
    u ^= v << j;
    g1 ^= g2 << j;
  }
  return Elem{static_cast<std::uint32_t>(poly2::mod(g1, modulus_))};
}

Elem Field::inv(Elem x) const {
  if (x.isZero()) throw std::domain_error("inverse of zero");
  if (!log_.empty()) return Elem{antilog_[groupOrder() - log_[x.bits()]]};
  return invEuclid(x);
}

Elem Field::pow(Elem x, std::int64_t e) const {
  if (x.isZero()) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return e == 0 ? kOne : kZero;
  }
  const std::int64_t order = groupOrder();
  std::uint64_t r = static_cast<std::uint64_t>(((e % order) + order) % order);
  if (!log_.empty()) return Elem{antilog_[(std::uint64_t{log_[x.bits()]} * r) % order]};
  Elem acc = kOne;
  while (r) {
    if (r & 1) acc = mulReduce(acc, x);
    x = mulReduce(x, x);
    r >>= 1;
  }
  return acc;
}

Elem Field::frobenius(Elem x, std::int64_t j) const {
  const std::int64_t n = n_;
  for (std::int64_t i = ((j % n) + n) % n; i > 0; --i) x = mul(x, x);
  return x;
}

void Field::requireDivisor(unsigned k) const {
  if (k == 0 || n_ % k != 0)
    throw std::invalid_argument(std::to_string(k) + " does not divide the field degree " + std::to_string(n_));
}

void Field::requireElement(Elem x) const {
  if (!contains(x)) throw std::invalid_argument("0x" + toHex(x) + " is not an element of GF(2^" + std::to_string(n_) + ")");
}

Elem Field::relativeTrace(Elem x, unsigned s, unsigned t) const {
  requireDivisor(s);
  if (t == 0 || s % t != 0)
    throw std::invalid_argument("relative trace needs t | s, got s=" + std::to_string(s) + " t=" + std::to_string(t));
  if (!isInSubfield(x, s))
    throw std::invalid_argument("0x" + toHex(x) + " is not in GF(2^" + std::to_string(s) + ")");
  Elem acc = kZero;
  Elem y = x;
  for (unsigned i = 0; i < s / t; ++i) {
    acc += y;
    y = frobenius(y, t);
  }
  return acc;
}

unsigned Field::absoluteTrace(Elem a, unsigned t) const {
  const Elem tr = relativeTrace(a, t, 1);
  if (tr.bits() > 1) throw InvariantViolation("absolute trace of 0x" + toHex(a) + " is not in GF(2)");
  return tr.bits();
}

unsigned Field::subtrace(Elem a, unsigned t) const {
  requireDivisor(t);
  if (!isInSubfield(a, t))
    throw std::invalid_argument("0x" + toHex(a) + " is not in GF(2^" + std::to_string(t) + ")");
  // e2 of the conjugates: sum_j c_j * (c_0 + ... + c_{j-1})
  Elem prefix = kZero;
  Elem e2 = kZero;
  Elem c = a;
  for (unsigned j = 0; j < t; ++j) {
    e2 += mul(prefix, c);
    prefix += c;
    c = mul(c, c);
  }
  if (e2.bits() > 1)
    throw InvariantViolation("subtrace of 0x" + toHex(a) + " over GF(2^" + std::to_string(t) +
                             ") evaluated to 0x" + toHex(e2) + ", outside GF(2)");
  return e2.bits();
}

std::uint32_t Field::discreteLog(Elem x) const {
  if (x.isZero()) throw std::domain_error("discrete log of zero");
  requireElement(x);
  if (log_.empty()) throw std::logic_error("discrete log needs log tables (degree " + std::to_string(n_) + ")");
  return log_[x.bits()];
}

std::uint32_t Field::multiplicativeOrder(Elem x) const {
  if (x.isZero()) throw std::domain_error("order of zero");
  std::uint32_t order = groupOrder();
  for (auto p : primeFactors(order)) {
    while (order % p == 0 && pow(x, order / p) == kOne) order /= static_cast<std::uint32_t>(p);
  }
  return order;
}

bool Field::isInSubfield(Elem x, unsigned k) const {
  requireDivisor(k);
  return contains(x) && frobenius(x, k) == x;
}

Elem Field::subfieldGenerator(unsigned k) const {
  requireDivisor(k);
  const std::uint32_t sub = (std::uint32_t{1} << k) - 1;
  return pow(generator_, groupOrder() / sub);
}

std::vector<Elem> Field::subfieldElements(unsigned k) const {
  const Elem h = subfieldGenerator(k);
  const std::uint32_t sub = (std::uint32_t{1} << k) - 1;
  std::vector<Elem> out{kZero};
  out.reserve(sub + 1);
  Elem y = kOne;
  for (std::uint32_t i = 0; i < sub; ++i) {
    out.push_back(y);
    y = mul(y, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> Field::cosetOfSubfieldStar(Elem a, unsigned k) const {
  if (a.isZero()) throw std::domain_error("coset of zero");
  requireElement(a);
  const Elem h = subfieldGenerator(k);
  const std::uint32_t sub = (std::uint32_t{1} << k) - 1;
  std::vector<Elem> out;
  out.reserve(sub);
  Elem y = a;
  for (std::uint32_t i = 0; i < sub; ++i) {
    out.push_back(y);
    y = mul(y, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subfield::Subfield(FieldPtr ambient, unsigned k) : field_(std::move(ambient)), k_(k) {
  field_->requireDivisor(k);
  if (k_ == field_->degree()) {
    primitive_ = field_->generator();
    for (unsigned i = 0; i < k_; ++i) basis_.emplace_back(1u << i);
  } else {
    primitive_ = field_->subfieldGenerator(k_);
    Elem y = kOne;
    for (unsigned i = 0; i < k_; ++i) {
      basis_.push_back(y);
      y = field_->mul(y, primitive_);
    }
  }

  for (unsigned i = 0; i < k_; ++i) {
    std::uint32_t v = basis_[i].bits();
    std::uint32_t c = 1u << i;
    for (const auto& row : rows_) {
      if (v & std::bit_floor(row.vec)) {
        v ^= row.vec;
        c ^= row.coords;
      }
    }
    if (v == 0) throw InvariantViolation("subfield basis is linearly dependent");
    auto pos = std::find_if(rows_.begin(), rows_.end(), [v](const EchelonRow& r) { return r.vec < v; });
    rows_.insert(pos, EchelonRow{v, c});
  }

  for (unsigned i = 0; i < k_; ++i)
    traceMask_ |= static_cast<std::uint32_t>(field_->absoluteTrace(basis_[i], k_)) << i;
}

Elem Subfield::fromCoords(std::uint32_t coords) const {
  Elem x = kZero;
  for (unsigned i = 0; i < k_; ++i)
    if (coords >> i & 1) x += basis_[i];
  return x;
}

std::uint32_t Subfield::coords(Elem x) const {
  std::uint32_t v = x.bits();
  std::uint32_t c = 0;
  for (const auto& row : rows_) {
    if (v & std::bit_floor(row.vec)) {
      v ^= row.vec;
      c ^= row.coords;
    }
  }
  if (v != 0)
    throw std::invalid_argument("0x" + toHex(x) + " is not in the subfield GF(2^" + std::to_string(k_) + ")");
  return c;
}

std::uint32_t Subfield::traceMaskFor(Elem b) const {
  std::uint32_t w = 0;
  for (unsigned i = 0; i < k_; ++i)
    w |= static_cast<std::uint32_t>(field_->absoluteTrace(field_->mul(b, basis_[i]), k_)) << i;
  return w;
}

std::vector<Elem> Subfield::elementsByCoords() const {
  std::vector<Elem> out(size());
  for (std::uint32_t c = 1; c < size(); ++c) out[c] = out[c & (c - 1)] + basis_[std::countr_zero(c)];
  return out;
}

std::vector<Elem> Subfield::elements() const {
  auto out = elementsByCoords();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dillon
