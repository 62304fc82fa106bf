#include "orbitlab/scalar.hpp"

namespace orbitlab {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw ParseError("not a rational number: '" + text + "'");
  r.canonicalize();
  return r;
}

Fp::Fp(std::int64_t value, std::uint64_t p) : p_(p) {
  if (p < 2) throw std::invalid_argument("F_p needs p >= 2");
  std::int64_t m = value % static_cast<std::int64_t>(p);
  if (m < 0) m += static_cast<std::int64_t>(p);
  v_ = static_cast<std::uint64_t>(m);
}

void Fp::check_same(const Fp& o) const {
  if (p_ != o.p_) throw DimensionMismatch("mixing elements of different prime fields");
}

Fp& Fp::operator+=(const Fp& o) {
  check_same(o);
  v_ += o.v_;
  if (v_ >= p_) v_ -= p_;
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  check_same(o);
  v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  check_same(o);
  v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % p_);
  return *this;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
  // Fermat; p is prime by construction of every caller.
  std::uint64_t result = 1, base = v_, e = p_ - 2;
  while (e) {
    if (e & 1) result = static_cast<std::uint64_t>(static_cast<unsigned __int128>(result) * base % p_);
    base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % p_);
    e >>= 1;
  }
  Fp out;
  out.v_ = result;
  out.p_ = p_;
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace orbitlab
