#pragma once

// Exact scalar fields used by binary forms: GMP rationals and F_p.

#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "orbitlab/errors.hpp"

namespace orbitlab {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);

/// Element of the prime field F_p. The modulus travels with the value so
/// forms over different primes cannot be mixed silently.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint64_t p);

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  Fp inverse() const;

  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(0, p_) - *this; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

 private:
  void check_same(const Fp& o) const;
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Uniform ring operations the form routines need beyond + - *.
template <class T>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational from_int(long n, const Rational&) { return Rational(n); }
  static Rational div_int(const Rational& x, long n) { return x / Rational(n); }
  static Rational mul_int(const Rational& x, const mpz_class& n) { return x * n; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static unsigned long characteristic(const Rational&) { return 0; }
};

template <>
struct ScalarOps<Fp> {
  static Fp from_int(long n, const Fp& like) { return Fp(n, like.modulus()); }
  static Fp div_int(const Fp& x, long n) {
    Fp d(n, x.modulus());
    if (d.value() == 0)
      throw NonInvertibleFactorial("division by " + std::to_string(n) + " in F_" +
                                   std::to_string(x.modulus()));
    return x / d;
  }
  static Fp mul_int(const Fp& x, const mpz_class& n) {
    mpz_class m = n % mpz_class(static_cast<unsigned long>(x.modulus()));
    return x * Fp(m.get_si(), x.modulus());
  }
  static bool is_zero(const Fp& x) { return x.value() == 0; }
  static unsigned long characteristic(const Fp& x) { return x.modulus(); }
};

}  // namespace orbitlab
