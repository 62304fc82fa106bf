#include "orbitlab/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "orbitlab/errors.hpp"
#include "orbitlab/scalar.hpp"

namespace orbitlab::oracle {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (std::uint64_t(1) << 32) || !is_prime(p))
    throw ConfigError("field modulus " + std::to_string(p) + " is not a prime below 2^32");
  barrett_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
}

Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p_), nr = a;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return static_cast<Elem>(t);
}

Elem PrimeField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<Elem>(r);
}

void PrimeField::row_sub(Elem* dst, const Elem* src, Elem f, std::size_t n) const {
  const std::uint64_t nf = f == 0 ? 0 : p_ - f;
  for (std::size_t k = 0; k < n; ++k) dst[k] = reduce(dst[k] + nf * src[k]);
}

// -- ExtensionField ----------------------------------------------------------

namespace {

std::uint64_t ipow(std::uint64_t p, int k) {
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  return q;
}

constexpr std::uint64_t kMaxFieldSize = std::uint64_t(1) << 26;

}  // namespace

std::shared_ptr<const ExtensionField::Tables> ExtensionField::build(std::uint64_t p, int k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>, std::shared_ptr<const Tables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find({p, k}); it != cache.end()) return it->second;

  const std::uint64_t q = ipow(p, k);
  const std::uint64_t order = q - 1;
  auto t = std::make_shared<Tables>();
  t->exp.resize(order);
  t->log.assign(q, static_cast<Elem>(order));

  // Monic x^k + c_{k-1} x^{k-1} + ... + c_0, candidates in increasing code
  // order; accept the first for which x has multiplicative order q - 1.
  std::vector<std::uint64_t> c(k), digits(k), pw(k);
  for (int i = 0; i < k; ++i) pw[i] = ipow(p, i);
  bool found = false;
  for (std::uint64_t code = 1; code < q && !found; ++code) {
    if (code % p == 0) continue;  // c_0 = 0 makes x a zero divisor
    for (int i = 0; i < k; ++i) c[i] = (code / pw[i]) % p;
    std::fill(digits.begin(), digits.end(), 0);
    digits[0] = 1;
    t->exp[0] = 1;
    bool primitive = true;
    for (std::uint64_t n = 1; n <= order; ++n) {
      // multiply by x and reduce x^k = -sum c_i x^i
      const std::uint64_t top = digits[k - 1];
      for (int i = k - 1; i > 0; --i) digits[i] = (digits[i - 1] + (p - top * c[i] % p)) % p;
      digits[0] = (p - top * c[0] % p) % p;
      std::uint64_t enc = 0;
      for (int i = 0; i < k; ++i) enc += digits[i] * pw[i];
      if (n == order) {
        primitive = enc == 1;
        break;
      }
      if (enc == 1) {
        primitive = false;
        break;
      }
      t->exp[n] = static_cast<std::uint32_t>(enc);
    }
    found = primitive;
  }
  if (!found) throw std::logic_error("no primitive polynomial found");

  for (std::uint64_t n = 0; n < order; ++n) t->log[t->exp[n]] = static_cast<Elem>(n);
  t->zech.resize(order);
  for (std::uint64_t n = 0; n < order; ++n) {
    const std::uint32_t enc = t->exp[n];
    const std::uint32_t plus_one = (enc % p == p - 1) ? enc - static_cast<std::uint32_t>(p - 1) : enc + 1;
    t->zech[n] = t->log[plus_one];
  }
  cache.emplace(std::make_pair(p, k), t);
  return t;
}

ExtensionField::ExtensionField(std::uint64_t p, int k) : p_(p), k_(k) {
  if (p < 2 || !is_prime(p)) throw ConfigError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw ConfigError("extension degree must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw ConfigError("field GF(" + std::to_string(p) + "^" + std::to_string(k) + ") is too large");
  }
  order_ = static_cast<std::uint32_t>(q - 1);
  zero_ = order_;
  minus_one_ = p == 2 ? 0 : order_ / 2;
  tables_ = build(p, k);
}

ExtensionField ExtensionField::with_min_size(std::uint64_t p, std::uint64_t min_size) {
  int k = 1;
  for (std::uint64_t q = p; q < min_size; q *= p) ++k;
  return ExtensionField(p, k);
}

Elem ExtensionField::inv(Elem a) const {
  if (a == zero_) throw std::domain_error("inverse of zero in " + name());
  return a == 0 ? 0 : order_ - a;
}

Elem ExtensionField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return tables_->log[static_cast<std::uint32_t>(r)];
}

Elem ExtensionField::random(std::mt19937_64& rng) const {
  return tables_->log[static_cast<std::uint32_t>(rng() % (std::uint64_t(order_) + 1))];
}

void ExtensionField::row_sub(Elem* dst, const Elem* src, Elem f, std::size_t n) const {
  if (f == zero_) return;
  const Elem nf = neg(f);
  for (std::size_t k = 0; k < n; ++k)
    if (src[k] != zero_) dst[k] = add(dst[k], mul(nf, src[k]));
}

}  // namespace orbitlab::oracle
