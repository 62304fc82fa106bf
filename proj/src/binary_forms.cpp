#include "orbitlab/binary_forms.hpp"

#include <map>
#include <sstream>

namespace orbitlab::forms {

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BinaryForm sl2_substitute(const BinaryForm& A, const Matrix2& g) {
  if (g.det() != 1) throw NotUnimodular("determinant is " + g.det().get_str() + ", not 1");
  return BinaryForm(substitute_coefficients(A.coeffs, g.p, g.q, g.r, g.s));
}

// -- CovariantExpr -----------------------------------------------------------

CovariantExpr CovariantExpr::F() {
  return CovariantExpr(std::make_shared<const Node>(Node{Kind::GenericF, 0, nullptr, nullptr}));
}

CovariantExpr CovariantExpr::transvect(const CovariantExpr& a, const CovariantExpr& b, int r) {
  if (r < 0) throw OrderTooSmall("negative transvectant index");
  return CovariantExpr(std::make_shared<const Node>(Node{Kind::Transvect, r, a.node_, b.node_}));
}

CovariantExpr CovariantExpr::product(const CovariantExpr& a, const CovariantExpr& b) {
  return CovariantExpr(std::make_shared<const Node>(Node{Kind::Product, 0, a.node_, b.node_}));
}

CovariantExpr CovariantExpr::power(const CovariantExpr& base, int k) {
  if (k < 0) throw std::invalid_argument("negative power of a covariant");
  return CovariantExpr(std::make_shared<const Node>(Node{Kind::Power, k, base.node_, nullptr}));
}

int CovariantExpr::degree() const {
  switch (kind()) {
    case Kind::GenericF: return 1;
    case Kind::Transvect:
    case Kind::Product: return left().degree() + right().degree();
    case Kind::Power: return index() * left().degree();
  }
  return 0;
}

int CovariantExpr::order(int d) const {
  switch (kind()) {
    case Kind::GenericF: return d;
    case Kind::Transvect: {
      const int a = left().order(d), b = right().order(d);
      if (index() > a || index() > b)
        throw OrderTooSmall("transvectant index " + std::to_string(index()) + " exceeds orders " +
                            std::to_string(a) + ", " + std::to_string(b));
      return a + b - 2 * index();
    }
    case Kind::Product: return left().order(d) + right().order(d);
    case Kind::Power: return index() * left().order(d);
  }
  return 0;
}

std::string CovariantExpr::to_string() const {
  switch (kind()) {
    case Kind::GenericF: return "F";
    case Kind::Transvect:
      return "(" + left().to_string() + ", " + right().to_string() + ")_" + std::to_string(index());
    case Kind::Product: return left().to_string() + "*" + right().to_string();
    case Kind::Power: return "[" + left().to_string() + "]^" + std::to_string(index());
  }
  return {};
}

PolyForm generic_form(int d) {
  if (d < 0) throw std::invalid_argument("negative order");
  std::vector<Poly> c;
  for (int i = 0; i <= d; ++i) c.push_back(Poly::variable(d + 1, i));
  return PolyForm(std::move(c));
}

namespace {

PolyForm eval_node(const CovariantExpr& e, int d, std::map<const void*, PolyForm>& memo) {
  if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
  PolyForm out;
  switch (e.kind()) {
    case CovariantExpr::Kind::GenericF: out = generic_form(d); break;
    case CovariantExpr::Kind::Transvect:
      out = transvectant(eval_node(e.left(), d, memo), eval_node(e.right(), d, memo), e.index());
      break;
    case CovariantExpr::Kind::Product:
      out = product(eval_node(e.left(), d, memo), eval_node(e.right(), d, memo));
      break;
    case CovariantExpr::Kind::Power: {
      out = PolyForm({Poly::constant(d + 1, Rational(1))});
      if (e.index() > 0) {
        const PolyForm base = eval_node(e.left(), d, memo);
        for (int k = 0; k < e.index(); ++k) out = product(out, base);
      }
      break;
    }
  }
  memo.emplace(e.id(), out);
  return out;
}

}  // namespace

PolyForm evaluate_covariant(const CovariantExpr& expr, int d) {
  expr.order(d);  // validates every transvectant index up front
  std::map<const void*, PolyForm> memo;
  return eval_node(expr, d, memo);
}

BinaryForm theta(const PolyForm& P, const BinaryForm& E) {
  std::vector<Rational> c;
  for (const auto& phi : P.coeffs) c.push_back(phi.evaluate(E.coeffs));
  return BinaryForm(std::move(c));
}

FpForm theta(const PolyForm& P, const FpForm& E) {
  std::vector<Fp> c;
  for (const auto& phi : P.coeffs) c.push_back(phi.evaluate(E.coeffs));
  return FpForm(std::move(c));
}

Rational theta(const Poly& invariant, const BinaryForm& E) { return invariant.evaluate(E.coeffs); }

namespace covariants {

namespace {
CovariantExpr F() { return CovariantExpr::F(); }
CovariantExpr tv(const CovariantExpr& a, const CovariantExpr& b, int r) {
  return CovariantExpr::transvect(a, b, r);
}
}  // namespace

CovariantExpr g2() { return tv(F(), F(), 4); }
CovariantExpr g3() { return tv(F(), tv(F(), F(), 2), 4); }
CovariantExpr hessian() { return tv(F(), F(), 2); }
CovariantExpr i4() { return tv(F(), F(), 4); }
CovariantExpr quintic_A() {
  const auto i = i4();
  return tv(i, i, 2);
}
CovariantExpr quintic_B() { return tv(CovariantExpr::power(i4(), 3), hessian(), 6); }
CovariantExpr quintic_C() {
  return tv(CovariantExpr::power(i4(), 5), CovariantExpr::power(F(), 2), 10);
}
CovariantExpr septimic_delta() { return tv(tv(F(), F(), 4), tv(F(), F(), 6), 1); }

}  // namespace covariants

namespace {

Poly invariant_of(const CovariantExpr& e, int d) {
  PolyForm f = evaluate_covariant(e, d);
  if (f.order() != 0) throw std::logic_error("expected an invariant, got order " + std::to_string(f.order()));
  return f.coeffs[0];
}

void require_order(const BinaryForm& E, int d) {
  if (E.order() != d)
    throw DimensionMismatch("expected a form of order " + std::to_string(d) + ", got " +
                            std::to_string(E.order()));
}

}  // namespace

Poly quartic_defining_equation(const BinaryForm& E) {
  require_order(E, 4);
  const Poly g2 = invariant_of(covariants::g2(), 4);
  const Poly g3 = invariant_of(covariants::g3(), 4);
  const Rational t2 = theta(g2, E), t3 = theta(g3, E);
  if (t2 == 0 && t3 == 0) throw DegenerateForm("both quartic invariants vanish at E");
  return (t3 * t3) * (g2 * g2 * g2) - (t2 * t2 * t2) * (g3 * g3);
}

QuinticGenerators quintic_generators(const BinaryForm& E) {
  require_order(E, 5);
  const Poly A = invariant_of(covariants::quintic_A(), 5);
  const Poly B = invariant_of(covariants::quintic_B(), 5);
  const Poly C = invariant_of(covariants::quintic_C(), 5);
  const Rational tA = theta(A, E), tB = theta(B, E), tC = theta(C, E);
  if (tA == 0) throw DegenerateForm("the degree-4 invariant vanishes at E");
  const Poly AB = A * B;
  QuinticGenerators out{tB * (A * A) - (tA * tA) * B, (tA * tB) * C - tC * AB};
  if (out.z12.is_zero()) throw DegenerateForm("degree-12 generator degenerates at E");
  return out;
}

BinaryForm parse_form(const std::string& text) {
  std::vector<Rational> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string trimmed;
    for (char ch : item)
      if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    c.push_back(parse_rational(trimmed));
  }
  if (c.empty()) throw ParseError("empty form literal");
  return BinaryForm(std::move(c));
}

std::string format_form(const BinaryForm& f) {
  std::string out;
  for (int i = 0; i <= f.order(); ++i) {
    if (i) out += ",";
    out += f[i].get_str();
  }
  return out;
}

}  // namespace orbitlab::forms
