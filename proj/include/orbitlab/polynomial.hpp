#pragma once

// Sparse multivariate polynomials in a_0..a_{n-1} with rational coefficients.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orbitlab/scalar.hpp"

namespace orbitlab {

class Poly {
 public:
  using Exponent = std::vector<std::uint16_t>;
  using Terms = std::map<Exponent, Rational>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}
  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const Rational& c);
  /// Total degree of the highest term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& k);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& k) { return a *= k; }
  friend Poly operator*(const Rational& k, Poly a) { return a *= k; }
  Poly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Poly&, const Poly&) = default;

  Rational evaluate(const std::vector<Rational>& point) const;
  /// Coefficients are reduced mod p; throws if a denominator vanishes mod p.
  Fp evaluate(const std::vector<Fp>& point) const;

  /// Graded-lex rendering with a_0 > a_1 > ...; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void check_vars(const Poly& o) const;
  int nvars_ = 0;
  Terms terms_;  // no zero coefficients stored
};

template <>
struct ScalarOps<Poly> {
  static Poly from_int(long n, const Poly& like) { return Poly::constant(like.nvars(), Rational(n)); }
  static Poly div_int(const Poly& x, long n) {
    Rational k(1, n);
    k.canonicalize();
    return x * k;
  }
  static Poly mul_int(const Poly& x, const mpz_class& n) { return x * Rational(n); }
  static bool is_zero(const Poly& x) { return x.is_zero(); }
  static unsigned long characteristic(const Poly&) { return 0; }
};

}  // namespace orbitlab
