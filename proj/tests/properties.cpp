#include "properties.hpp"

#include <map>
#include <sstream>

#include "orbitlab/binary_forms.hpp"
#include "orbitlab/orbit_oracle.hpp"
#include "orbitlab/repring.hpp"
#include "orbitlab/threshold_pipeline.hpp"
#include "reference_impls.hpp"

namespace props {

using namespace orbitlab;
using forms::BinaryForm;
using repring::Character;

Outcome for_all(const std::string& name, int cases, std::uint64_t seed, const Check& check) {
  Outcome out{name};
  for (int i = 0; i < cases; ++i) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(i));
    std::optional<std::string> fail;
    try {
      fail = check(rng);
    } catch (const std::exception& e) {
      fail = std::string("threw: ") + e.what();
    }
    ++out.cases;
    if (fail) {
      if (out.failures++ == 0) out.first_failure = "case " + std::to_string(i) + ": " + *fail;
    }
  }
  return out;
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

BinaryForm random_form(std::mt19937_64& rng, int n) { return BinaryForm(testref::random_coeffs(rng, n)); }

BinaryForm random_nonzero_form(std::mt19937_64& rng, int n) {
  BinaryForm f;
  do f = random_form(rng, n);
  while (forms::is_zero(f));
  return f;
}

forms::Matrix2 random_sl2(std::mt19937_64& rng) {
  Rational p;
  do p = uniform(rng, -5, 5);
  while (p == 0);
  const Rational q = uniform(rng, -5, 5), r = uniform(rng, -5, 5);
  return {p, q, r, (1 + q * r) / p};
}

Character random_character(std::mt19937_64& rng, int max_q, int lo, int hi) {
  Character c;
  const int terms = uniform(rng, 0, 4);
  for (int t = 0; t < terms; ++t) c.add(uniform(rng, 0, max_q), uniform(rng, lo, hi));
  return c;
}

std::string show(const BinaryForm& f) { return forms::format_form(f); }

std::optional<std::string> fail_if(bool bad, const std::string& what) {
  if (bad) return what;
  return std::nullopt;
}

// Oracle tables for the (sharp) property, computed once per (d, top, seed).
struct OracleCase {
  int d;
  int top;
};
constexpr OracleCase kOracleCases[] = {{4, 8}, {5, 12}, {6, 10}, {7, 7}};

const oracle::OracleReport& cached_table(int d, int top, std::uint64_t seed) {
  static std::map<std::tuple<int, int, std::uint64_t>, oracle::OracleReport> cache;
  auto key = std::make_tuple(d, top, seed);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, oracle::betti_table(oracle::rational_spec(d, seed), top)).first;
  return it->second;
}

}  // namespace

std::vector<Property> all_properties(int n) {
  std::vector<Property> ps;
  auto add = [&](std::string name, std::uint64_t seed, Check check, int cases = 0) {
    const int k = std::max(n, cases);
    ps.push_back({name, [name, seed, check, k] { return for_all(name, k, seed, check); }});
  };

  // -- representation ring -------------------------------------------------
  add("product dimension is multiplicative", 1, [](auto& rng) {
    const int p = uniform(rng, 0, 40), q = uniform(rng, 0, 40);
    return fail_if(repring::dimension(repring::product(Character::s(p), Character::s(q))) != (p + 1) * (q + 1),
                   "p=" + std::to_string(p) + " q=" + std::to_string(q));
  });
  add("plethysm dimension is binomial", 2, [](auto& rng) {
    const int p = uniform(rng, 0, 12), q = uniform(rng, 0, 12);
    return fail_if(repring::dimension(repring::plethysm_sym(p, q)) != testref::binom(p + q, q),
                   "p=" + std::to_string(p) + " q=" + std::to_string(q));
  });
  add("product is commutative and associative", 3, [](auto& rng) {
    const auto a = random_character(rng, 10, -3, 3), b = random_character(rng, 10, -3, 3),
               c = random_character(rng, 10, -3, 3);
    using repring::product;
    return fail_if(product(a, b) != product(b, a) || product(product(a, b), c) != product(a, product(b, c)),
                   repring::to_string(a) + " | " + repring::to_string(b) + " | " + repring::to_string(c));
  });
  add("sup is an upper bound, attained iff comparable", 4, [](auto& rng) {
    const auto a = random_character(rng, 10, 0, 3), b = random_character(rng, 10, 0, 3);
    const auto s = repring::sup(a, b);
    const bool ok = repring::geq(s, a) && repring::geq(s, b) && ((s == b) == repring::geq(b, a));
    return fail_if(!ok, repring::to_string(a) + " | " + repring::to_string(b));
  });
  add("plethysm matches weight enumeration", 5, [](auto& rng) {
    const int p = uniform(rng, 0, 8), q = uniform(rng, 0, 8);
    Character c;
    for (const auto& [k, m] : testref::plethysm_by_weights(p, q)) c.add(k, m);
    return fail_if(repring::plethysm_sym(p, q) != c, "p=" + std::to_string(p) + " q=" + std::to_string(q));
  });
  add("weights to character round trip", 6, [](auto& rng) {
    const auto c = random_character(rng, 30, 1, 4);
    // keep one parity so the weights form a single-parity representation
    Character same;
    for (const auto& [q, m] : c.coeffs()) same.add(q - q % 2, m);
    return fail_if(repring::character_from_weights(repring::to_weights(same)) != same, repring::to_string(same));
  });

  // -- binary forms ----------------------------------------------------------
  add("transvectant bilinearity", 10, [](auto& rng) {
    const int p = uniform(rng, 0, 8), q = uniform(rng, 0, 8), r = uniform(rng, 0, std::min(p, q));
    const auto A = random_form(rng, p), A2 = random_form(rng, p), B = random_form(rng, q);
    Rational lambda(uniform(rng, -9, 9), uniform(rng, 1, 5));
    lambda.canonicalize();
    using forms::add;
    using forms::scale;
    using forms::transvectant;
    const auto lhs = transvectant(add(scale(A, lambda), A2), B, r);
    const auto rhs = add(scale(transvectant(A, B, r), lambda), transvectant(A2, B, r));
    return fail_if(lhs != rhs, show(A) + " | " + show(A2) + " | " + show(B) + " r=" + std::to_string(r));
  });
  add("transvectant symmetry", 11, [](auto& rng) {
    const int p = uniform(rng, 0, 8), q = uniform(rng, 0, 8), r = uniform(rng, 0, std::min(p, q));
    const auto A = random_form(rng, p), B = random_form(rng, q);
    auto BA = forms::transvectant(B, A, r);
    if (r % 2) BA = forms::scale(BA, Rational(-1));
    return fail_if(forms::transvectant(A, B, r) != BA, show(A) + " | " + show(B) + " r=" + std::to_string(r));
  });
  add("transvectant SL2 equivariance", 12, [](auto& rng) {
    const int p = uniform(rng, 0, 6), q = uniform(rng, 0, 6), r = uniform(rng, 0, std::min(p, q));
    const auto A = random_form(rng, p), B = random_form(rng, q);
    const auto g = random_sl2(rng);
    const auto lhs = forms::sl2_substitute(forms::transvectant(A, B, r), g);
    const auto rhs = forms::transvectant(forms::sl2_substitute(A, g), forms::sl2_substitute(B, g), r);
    return fail_if(lhs != rhs, show(A) + " | " + show(B) + " r=" + std::to_string(r));
  });
  add("apolar forms of a nonzero form span a hyperplane", 13, [](auto& rng) {
    const int p = uniform(rng, 1, 8);
    const auto A = random_nonzero_form(rng, p);
    // B -> (A, B)_p is a linear functional on S_p; its kernel has dimension p
    // exactly when the functional is nonzero on some basis form.
    std::vector<Rational> values;
    for (int j = 0; j <= p; ++j) {
      std::vector<Rational> e(p + 1, 0);
      e[j] = 1;
      values.push_back(forms::transvectant(A, BinaryForm(e), p)[0]);
    }
    const int rank = std::any_of(values.begin(), values.end(), [](const Rational& v) { return v != 0; }) ? 1 : 0;
    const int kernel = p + 1 - rank;
    // and a random element of the kernel is really apolar
    std::vector<Rational> b(p + 1, 0);
    if (rank) {
      int pivot = 0;
      while (values[pivot] == 0) ++pivot;
      for (int j = 0; j <= p; ++j)
        if (j != pivot) b[j] = uniform(rng, -5, 5);
      Rational acc = 0;
      for (int j = 0; j <= p; ++j)
        if (j != pivot) acc += values[j] * b[j];
      b[pivot] = -acc / values[pivot];
    }
    const bool apolar = forms::transvectant(A, BinaryForm(b), p)[0] == 0;
    return fail_if(kernel != p || !apolar, show(A));
  });
  add("odd self-transvectants of the generic form vanish", 14, [](auto& rng) {
    const int d = uniform(rng, 1, 10), k = uniform(rng, 0, std::min(4, (d - 1) / 2));
    const auto F = forms::CovariantExpr::F();
    const auto P = forms::evaluate_covariant(forms::CovariantExpr::transvect(F, F, 2 * k + 1), d);
    return fail_if(!forms::is_zero(P), "d=" + std::to_string(d) + " k=" + std::to_string(k));
  });
  add("evaluation is a ring morphism", 15, [](auto& rng) {
    const int d = uniform(rng, 2, 6);
    const auto P = forms::evaluate_covariant(forms::covariants::hessian(), d);
    const auto E = random_form(rng, d);
    const Poly a = P[uniform(rng, 0, P.order())], b = P[uniform(rng, 0, P.order())];
    return fail_if(forms::theta(a * b, E) != forms::theta(a, E) * forms::theta(b, E), show(E));
  });
  add("quartic equation is SL2-invariant in E", 16, [](auto& rng) {
    BinaryForm E;
    do E = random_form(rng, 4);
    while (forms::theta(forms::evaluate_covariant(forms::covariants::g2(), 4)[0], E) == 0);
    const auto g = random_sl2(rng);
    const Poly eq = forms::quartic_defining_equation(E);
    return fail_if(forms::quartic_defining_equation(forms::sl2_substitute(E, g)) != eq ||
                       forms::theta(eq, forms::sl2_substitute(E, random_sl2(rng))) != 0,
                   show(E));
  });
  add("quintic generators are SL2-invariant in E", 17, [](auto& rng) {
    BinaryForm E;
    do E = random_form(rng, 5);
    while (forms::theta(forms::evaluate_covariant(forms::covariants::quintic_A(), 5)[0], E) == 0);
    const auto g = random_sl2(rng);
    const auto a = forms::quintic_generators(E), b = forms::quintic_generators(forms::sl2_substitute(E, g));
    const auto F = forms::sl2_substitute(E, random_sl2(rng));
    return fail_if(a.z8 != b.z8 || a.z12 != b.z12 || forms::theta(a.z8, F) != 0 || forms::theta(a.z12, F) != 0,
                   show(E));
  });

  // -- threshold pipeline ----------------------------------------------------
  add("covariant dimensions exhaust Sym^m(S_d)", 20, [](auto& rng) {
    const int d = uniform(rng, 1, 10), m = uniform(rng, 0, 14);
    mpz_class total = 0;
    for (int q = 0; q <= m * d; ++q) total += mpz_class(pipeline::zeta(d, m, q)) * (q + 1);
    return fail_if(total != testref::binom(m + d, d), "d=" + std::to_string(d) + " m=" + std::to_string(m));
  });
  add("zeta is the multiplicity in the plethysm", 21, [](auto& rng) {
    const int d = uniform(rng, 1, 10), m = uniform(rng, 0, 12), q = uniform(rng, 0, m * d);
    return fail_if(pipeline::zeta(d, m, q) != repring::plethysm_sym(m, d)[q],
                   "d=" + std::to_string(d) + " m=" + std::to_string(m) + " q=" + std::to_string(q));
  });
  add("qtilde is effective and below the threshold", 22, [](auto& rng) {
    const int d = uniform(rng, 4, 10), m = uniform(rng, 2, 14);
    std::map<int, Character> resolved;
    for (int j = 2; j < m; ++j)
      if (uniform(rng, 0, 3) == 0) resolved[j] = random_character(rng, j * d, 0, 2);
    const auto Q = pipeline::qtilde(d, m, resolved, {});
    return fail_if(!Q.is_effective() || !repring::geq(pipeline::threshold_character(d, m), Q),
                   "d=" + std::to_string(d) + " m=" + std::to_string(m));
  });
  add("sup difference is antitone in the subtrahend", 23, [](auto& rng) {
    std::int64_t a = uniform(rng, -20, 20), b = uniform(rng, -20, 20);
    const std::int64_t c = uniform(rng, -20, 20);
    if (a < b) std::swap(a, b);
    return fail_if(std::max(b, c) - b < std::max(a, c) - a,
                   std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
  });

  // -- oracle ----------------------------------------------------------------
  add("oracle kernels are weight-symmetric", 30, [](auto& rng) {
    const int d = uniform(rng, 4, 7), m = uniform(rng, 1, 26 / d + 2);
    const auto spec = oracle::rational_spec(d, rng());
    const int w = uniform(rng, 0, m * d);
    if ((m * d - w) % 2) return std::optional<std::string>();
    const auto a = oracle::kernel_block(spec, m, w), b = oracle::kernel_block(spec, m, -w);
    return fail_if(a.basis.size() != b.basis.size() || a.monomials.size() != b.monomials.size(),
                   "d=" + std::to_string(d) + " m=" + std::to_string(m) + " w=" + std::to_string(w));
  });
  add("oracle generators dominate qtilde", 31, [](auto& rng) {
    const auto& oc = kOracleCases[uniform(rng, 0, 3)];
    const auto& table = cached_table(oc.d, oc.top, uniform(rng, 1, 3));
    const int m = uniform(rng, 1, oc.top);
    std::map<int, Character> resolved;
    for (const auto& r : table.degrees)
      if (r.m < m && r.beta > 0) resolved[r.m] = *r.char_B;
    const auto* rec = table.find(m);
    const Character B = rec->beta > 0 ? *rec->char_B : Character{};
    const auto Q = pipeline::qtilde(oc.d, m, resolved, {});
    std::ostringstream os;
    os << "d=" << oc.d << " m=" << m << " B=" << repring::to_string(B) << " Q=" << repring::to_string(Q);
    return fail_if(!repring::geq(B, Q), os.str());
  });
  return ps;
}

}  // namespace props
