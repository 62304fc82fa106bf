#include "orbitlab/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbitlab {

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
  Poly p(nvars);
  Exponent e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void Poly::check_vars(const Poly& o) const {
  if (nvars_ != o.nvars_)
    throw DimensionMismatch("polynomials over " + std::to_string(nvars_) + " and " +
                            std::to_string(o.nvars_) + " variables");
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw DimensionMismatch("exponent length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

bool Poly::is_homogeneous() const {
  const int deg = degree();
  return std::all_of(terms_.begin(), terms_.end(), [deg](const auto& t) {
    return std::accumulate(t.first.begin(), t.first.end(), 0) == deg;
  });
}

Poly& Poly::operator+=(const Poly& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& k) {
  if (k == 0) {
    terms_.clear();
  } else {
    for (auto& [e, c] : terms_) c *= k;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_vars(b);
  Poly out(a.nvars_);
  Poly::Exponent e(a.nvars_);
  Rational c;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      c = ca * cb;
      out.add_term(e, c);
    }
  }
  return out;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw DimensionMismatch("polynomial in " + std::to_string(nvars_) + " variables evaluated at " +
                            std::to_string(point.size()) + " values");
  // Power tables keep this linear in the number of terms.
  std::vector<std::vector<Rational>> powers(nvars_);
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < nvars_; ++i)
      while (powers[i].size() <= e[i])
        powers[i].push_back(powers[i].empty() ? Rational(1) : powers[i].back() * point[i]);
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i]) t *= powers[i][e[i]];
    total += t;
  }
  return total;
}

Fp Poly::evaluate(const std::vector<Fp>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw DimensionMismatch("polynomial in " + std::to_string(nvars_) + " variables evaluated at " +
                            std::to_string(point.size()) + " values");
  if (nvars_ == 0) throw DimensionMismatch("cannot infer modulus for a constant polynomial");
  const std::uint64_t p = point.front().modulus();
  auto reduce = [p](const Rational& c) {
    mpz_class num = c.get_num() % mpz_class(static_cast<unsigned long>(p));
    mpz_class den = c.get_den() % mpz_class(static_cast<unsigned long>(p));
    if (den == 0) throw NonInvertibleFactorial("coefficient denominator divisible by p");
    return Fp(num.get_si(), p) / Fp(den.get_si(), p);
  };
  Fp total(0, p);
  for (const auto& [e, c] : terms_) {
    Fp t = reduce(c);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) {
    int dx = std::accumulate(x->first.begin(), x->first.end(), 0);
    int dy = std::accumulate(y->first.begin(), y->first.end(), 0);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    Rational c = t->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational mag = abs(c);
    bool is_const = std::all_of(t->first.begin(), t->first.end(), [](auto v) { return v == 0; });
    bool need_star = false;
    if (mag != 1 || is_const) {
      os << mag;
      need_star = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (t->first[i] == 0) continue;
      if (need_star) os << "*";
      os << "a_" << i;
      if (t->first[i] > 1) os << "^" << t->first[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace orbitlab
