#pragma once

// Binary forms in the binomial convention
//
//     A = sum_i binom(n, i) a_i x1^(n-i) x2^i,
//
// the transvectant calculus on them, covariant expression trees over the
// generic form F, and the explicit low-order ideal generators built from them.

#include <algorithm>
#include <array>
#include <memory>
#include <string>
#include <vector>

#include "orbitlab/errors.hpp"
#include "orbitlab/polynomial.hpp"
#include "orbitlab/scalar.hpp"

namespace orbitlab::forms {

long binomial(long n, long k);

/// A binary form stored by its binomial-convention coefficients a_0..a_n.
template <class T>
struct Form {
  std::vector<T> coeffs;

  Form() = default;
  explicit Form(std::vector<T> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) throw std::invalid_argument("a form needs at least one coefficient");
  }
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  const T& operator[](int i) const { return coeffs[i]; }
  friend bool operator==(const Form&, const Form&) = default;
};

using BinaryForm = Form<Rational>;
using FpForm = Form<Fp>;
/// Covariant of the generic form: coefficients are polynomials in a_0..a_d.
using PolyForm = Form<Poly>;

struct Matrix2 {
  Rational p, q, r, s;  // x1 = p x1' + q x2', x2 = r x1' + s x2'
  Rational det() const { return p * s - q * r; }
};

template <class T>
bool is_zero(const Form<T>& f) {
  return std::all_of(f.coeffs.begin(), f.coeffs.end(), [](const T& c) { return ScalarOps<T>::is_zero(c); });
}

/// Raw coefficients c_i of x1^(n-i) x2^i, i.e. binom(n, i) a_i.
template <class T>
std::vector<T> monomial_coeffs(const Form<T>& f) {
  std::vector<T> out;
  for (int i = 0; i <= f.order(); ++i)
    out.push_back(ScalarOps<T>::mul_int(f[i], binomial(f.order(), i)));
  return out;
}

template <class T>
Form<T> from_monomial_coeffs(const std::vector<T>& raw) {
  const int n = static_cast<int>(raw.size()) - 1;
  std::vector<T> a;
  for (int i = 0; i <= n; ++i) a.push_back(ScalarOps<T>::div_int(raw[i], binomial(n, i)));
  return Form<T>(std::move(a));
}

/// r-th transvectant (A, B)_r, of order order(A) + order(B) - 2r.
///
/// In the binomial convention the r-fold derivative with k differentiations in
/// x2 is p!/(p-r)! times the order-(p-r) form with coefficients a_k..a_{k+p-r},
/// so the factorial prefactor cancels and
///     (A, B)_r = sum_k (-1)^k binom(r, k) A<k> * B<r-k>.
/// The only division left is re-reading the product in the binomial basis.
template <class T>
Form<T> transvectant(const Form<T>& A, const Form<T>& B, int r) {
  const int p = A.order(), q = B.order();
  if (r < 0 || r > p || r > q)
    throw OrderTooSmall("transvectant index " + std::to_string(r) + " exceeds operand orders " +
                        std::to_string(p) + ", " + std::to_string(q));
  const int P = p - r, Q = q - r, N = P + Q;
  const unsigned long ch = ScalarOps<T>::characteristic(A[0]);
  if (ch != 0 && ch <= static_cast<unsigned long>(std::max({p, q, N})))
    throw NonInvertibleFactorial("transvectant of orders " + std::to_string(p) + ", " +
                                 std::to_string(q) + " needs characteristic above " +
                                 std::to_string(std::max({p, q, N})));
  std::vector<T> raw(N + 1, ScalarOps<T>::from_int(0, A[0]));
  // One scalar product per (a-index, b-index) pair; the integer weight
  // collects every (k, i, j) that touches it.
  for (int ia = 0; ia <= p; ++ia) {
    for (int ib = 0; ib <= q; ++ib) {
      const int n = ia + ib - r;
      if (n < 0 || n > N) continue;
      mpz_class weight = 0;
      for (int k = 0; k <= r; ++k) {
        const int i = ia - k, j = ib - (r - k);
        if (i < 0 || i > P || j < 0 || j > Q) continue;
        const mpz_class term = mpz_class(binomial(r, k)) * binomial(P, i) * binomial(Q, j);
        weight += (k % 2 ? -term : term);
      }
      if (weight == 0 || ScalarOps<T>::is_zero(A[ia]) || ScalarOps<T>::is_zero(B[ib])) continue;
      raw[n] = raw[n] + ScalarOps<T>::mul_int(A[ia] * B[ib], weight);
    }
  }
  return from_monomial_coeffs(raw);
}

template <class T>
Form<T> product(const Form<T>& A, const Form<T>& B) {
  return transvectant(A, B, 0);
}

template <class T>
Form<T> scale(const Form<T>& A, const T& k) {
  std::vector<T> c;
  for (const auto& x : A.coeffs) c.push_back(x * k);
  return Form<T>(std::move(c));
}

template <class T>
Form<T> add(const Form<T>& A, const Form<T>& B) {
  if (A.order() != B.order()) throw DimensionMismatch("adding forms of different orders");
  std::vector<T> c;
  for (int i = 0; i <= A.order(); ++i) c.push_back(A[i] + B[i]);
  return Form<T>(std::move(c));
}

/// Coefficients of A after x1 = p x1' + q x2', x2 = r x1' + s x2', with no
/// determinant condition. The coefficient formula has integer weights, so it
/// is valid in every characteristic:
///     a_i' = sum_{j,k} binom(i,k) binom(n-i, j-i+k) p^(n-j-k) q^k r^(j-i+k) s^(i-k) a_j.
template <class T, class S>
std::vector<S> substitute_coefficients(const std::vector<T>& a, const S& p, const S& q, const S& r,
                                       const S& s) {
  const int n = static_cast<int>(a.size()) - 1;
  auto powers = [n](const S& x) {
    std::vector<S> out{ScalarOps<S>::from_int(1, x)};
    for (int e = 1; e <= n; ++e) out.push_back(out.back() * x);
    return out;
  };
  const auto pp = powers(p), qp = powers(q), rp = powers(r), sp = powers(s);
  std::vector<S> out;
  for (int i = 0; i <= n; ++i) {
    S acc = ScalarOps<S>::from_int(0, p);
    for (int j = 0; j <= n; ++j) {
      S inner = ScalarOps<S>::from_int(0, p);
      for (int k = 0; k <= i; ++k) {
        const int re = j - i + k, pe = n - j - k;
        if (re < 0 || re > n - i || pe < 0) continue;
        inner = inner + ScalarOps<S>::mul_int(pp[pe] * qp[k] * rp[re] * sp[i - k],
                                              mpz_class(binomial(i, k)) * binomial(n - i, re));
      }
      acc = acc + inner * a[j];
    }
    out.push_back(acc);
  }
  return out;
}

/// Same substitution on raw coefficients c_i of x1^(n-i) x2^i:
///     c_k' = sum_{i,j} binom(n-i, k-j) binom(i, j) p^(n-i-k+j) q^(k-j) r^(i-j) s^j c_i.
/// Over Q this is the binomial version conjugated by diag(binom(n, i)); in
/// characteristic p <= n the two describe different representations.
template <class T, class S>
std::vector<S> substitute_monomial_coefficients(const std::vector<T>& c, const S& p, const S& q, const S& r,
                                                const S& s) {
  const int n = static_cast<int>(c.size()) - 1;
  auto powers = [n](const S& x) {
    std::vector<S> out{ScalarOps<S>::from_int(1, x)};
    for (int e = 1; e <= n; ++e) out.push_back(out.back() * x);
    return out;
  };
  const auto pp = powers(p), qp = powers(q), rp = powers(r), sp = powers(s);
  std::vector<S> out;
  for (int k = 0; k <= n; ++k) {
    S acc = ScalarOps<S>::from_int(0, p);
    for (int i = 0; i <= n; ++i) {
      S inner = ScalarOps<S>::from_int(0, p);
      for (int j = std::max(0, k - (n - i)); j <= std::min(i, k); ++j)
        inner = inner + ScalarOps<S>::mul_int(pp[n - i - k + j] * qp[k - j] * rp[i - j] * sp[j],
                                              mpz_class(binomial(n - i, k - j)) * binomial(i, j));
      acc = acc + inner * c[i];
    }
    out.push_back(acc);
  }
  return out;
}

/// SL2 action on forms; throws NotUnimodular unless det g = 1 exactly.
BinaryForm sl2_substitute(const BinaryForm& A, const Matrix2& g);

// -- Covariant expressions ---------------------------------------------------

/// Expression tree over the generic form F. Nodes are immutable and may be
/// shared between trees.
class CovariantExpr {
 public:
  enum class Kind { GenericF, Transvect, Product, Power };

  static CovariantExpr F();
  static CovariantExpr transvect(const CovariantExpr& a, const CovariantExpr& b, int r);
  static CovariantExpr product(const CovariantExpr& a, const CovariantExpr& b);
  static CovariantExpr power(const CovariantExpr& base, int k);

  Kind kind() const { return node_->kind; }
  int index() const { return node_->index; }
  CovariantExpr left() const { return CovariantExpr(node_->left); }
  CovariantExpr right() const { return CovariantExpr(node_->right); }
  const void* id() const { return node_.get(); }

  /// Degree in the coefficients a_i.
  int degree() const;
  /// Order in x1, x2 for the generic form of order d; OrderTooSmall if some
  /// transvectant index is illegal.
  int order(int d) const;
  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    int index = 0;  // r for Transvect, k for Power
    std::shared_ptr<const Node> left, right;
  };
  explicit CovariantExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// The generic form of order d: phi_i = a_i.
PolyForm generic_form(int d);

PolyForm evaluate_covariant(const CovariantExpr& expr, int d);

/// theta_E: substitutes the coefficients of E for a_0..a_d.
BinaryForm theta(const PolyForm& P, const BinaryForm& E);
FpForm theta(const PolyForm& P, const FpForm& E);
/// Also evaluates any polynomial in a_0..a_d at the coefficients of E.
Rational theta(const Poly& invariant, const BinaryForm& E);


// Classical covariants used by the explicit generators.
namespace covariants {
CovariantExpr g2();     // (F, F)_4
CovariantExpr g3();     // (F, (F, F)_2)_4
CovariantExpr hessian();  // H = (F, F)_2
CovariantExpr i4();     // i = (F, F)_4
CovariantExpr quintic_A();  // (i, i)_2
CovariantExpr quintic_B();  // (i^3, H)_6
CovariantExpr quintic_C();  // (i^5, F^2)_10
CovariantExpr septimic_delta();  // ((F, F)_4, (F, F)_6)_1
}  // namespace covariants

/// theta_E(g3)^2 g2^3 - theta_E(g2)^3 g3^2 for a quartic E.
Poly quartic_defining_equation(const BinaryForm& E);

struct QuinticGenerators {
  Poly z8;   // theta_E(B) A^2 - theta_E(A)^2 B
  Poly z12;  // theta_E(A B) C - theta_E(C) A B
};
QuinticGenerators quintic_generators(const BinaryForm& E);

/// "1,0,-3,2,1" (rationals like "1/2" allowed).
BinaryForm parse_form(const std::string& text);
std::string format_form(const BinaryForm& f);

}  // namespace orbitlab::forms
