#pragma once

// Independent computation of the graded ideal of an orbit closure.
//
// For a fixed form E of order d, a polynomial f in a_0..a_d lies in the ideal
// I of the closure of the SL2-orbit of E exactly when f(psi(E, g)) = 0 for
// every substitution g, where psi are the coefficients of E after the change
// of variables g (no determinant condition is needed because I is
// homogeneous). Each torus weight block of I_m is the kernel of an
// evaluation matrix at random substitutions; J_m = (a_0..a_d) I_{m-1} is a
// span computed block by block, and the generator dimension is
// dim I_m - dim J_m. Ranks are taken over word-size primes (rational mode)
// or over a large extension of F_p (characteristic-p mode), with
// independent lanes that must agree.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitlab/binary_forms.hpp"
#include "orbitlab/finite_field.hpp"
#include "orbitlab/repring.hpp"

namespace orbitlab::oracle {

using repring::Character;
using repring::WeightMultiplicity;

enum class Mode { RationalViaModular, PrimeField };

/// How E's coefficients and the ambient coordinates are read: binom(d, i) a_i
/// or c_i as the coefficient of x1^(d-i) x2^i. Over Q the two give isomorphic
/// ideals; in characteristic p <= d they are different group actions.
enum class Coordinates { Binomial, Monomial };

/// Default moduli for rational mode: primes in (2^30, 2^32).
std::vector<std::uint64_t> default_primes();

struct OrbitSpec {
  int d = 0;
  forms::BinaryForm E;  // integer coefficients
  Mode mode = Mode::RationalViaModular;
  std::vector<std::uint64_t> primes = default_primes();
  std::uint64_t p = 0;  // characteristic in PrimeField mode
  /// PrimeField mode: draw E's coefficients from the extension field instead
  /// of reducing the integer coefficients mod p.
  bool extension_coefficients = false;
  Coordinates coordinates = Coordinates::Binomial;
  std::uint64_t seed = 0;
  int points_margin = 10;
  std::size_t column_limit = 4000;
  int jobs = 1;

  /// ConfigError on a malformed spec.
  void validate() const;
};

/// Integer form of order d with coefficients in [-bound, bound], determined by
/// `seed`. The first and last coefficients are nonzero (mod `modulus` when
/// it is positive); draws violating this are discarded.
forms::BinaryForm sample_general_form(int d, std::uint64_t seed, int bound = 50, std::uint64_t modulus = 0);

OrbitSpec rational_spec(int d, std::uint64_t seed, std::vector<std::uint64_t> primes = default_primes());
/// Characteristic p with E drawn from the extension field, in monomial coordinates.
OrbitSpec char_p_spec(int d, std::uint64_t p, std::uint64_t seed);

/// Size of the largest weight block of degree m, predicted without building it.
std::size_t largest_block_size(int d, int m);

/// Weight of the monomial with exponents e: sum e_i (2i - d).
int monomial_weight(const std::vector<int>& e, int d);
/// Degree-m monomials of weight w in descending lexicographic order.
std::vector<std::vector<int>> weight_monomials(int d, int m, int w);

/// Kernel basis of one weight block, over the first lane's field.
struct WeightBlockResult {
  int m = 0;
  int w = 0;
  std::vector<std::vector<int>> monomials;
  std::vector<std::vector<Elem>> basis;  // coordinates w.r.t. monomials
  std::string field;
};

/// Kernel bases of every weight block of one degree.
struct DegreeKernels {
  int m = 0;
  std::vector<WeightBlockResult> blocks;  // ascending weight
  const WeightBlockResult* find(int w) const;
};

WeightBlockResult kernel_block(const OrbitSpec& spec, int m, int w);
DegreeKernels degree_kernels(const OrbitSpec& spec, int m);

struct IdealPiece {
  std::int64_t dim = 0;
  WeightMultiplicity weights;
  std::optional<Character> character;  // nullopt when not a representation
};
/// dim I_m and its character (all lanes must agree).
IdealPiece ideal_character(const OrbitSpec& spec, int m);

struct GeneratorPiece {
  int m = 0;
  std::int64_t dim_I = 0;
  std::int64_t dim_J = 0;
  std::int64_t beta = 0;
  WeightMultiplicity weights;  // of B(0, m) = I_m / J_m
  std::optional<Character> character;
};
/// Generators in degree previous.m + 1, with J = (a_0..a_d) times the given
/// kernels of the previous degree (first lane only).
GeneratorPiece generator_module(const OrbitSpec& spec, const DegreeKernels& previous);

enum class DegreeStatus { Computed, Skipped };
std::string to_string(DegreeStatus s);

struct DegreeResult {
  int m = 0;
  DegreeStatus status = DegreeStatus::Computed;
  std::int64_t dim_I = 0;
  std::int64_t dim_J = 0;
  std::int64_t beta = 0;
  WeightMultiplicity weights_I;
  WeightMultiplicity weights_B;
  std::optional<Character> char_I;
  std::optional<Character> char_B;
  std::size_t largest_block = 0;
  int attempts = 1;
  bool agreement = true;
  std::vector<std::string> warnings;
};

struct OracleReport {
  int d = 0;
  /// Coefficients of E as used: integers, or "gf:<code>" for extension-field
  /// elements, code = sum of base-p digits c_i p^i in the polynomial basis.
  std::vector<std::string> E;
  std::string mode;  // "rational" or "char_p"
  std::uint64_t characteristic = 0;
  std::vector<std::uint64_t> primes;
  std::string field;
  std::string coordinates;  // "binomial" or "monomial"
  std::uint64_t seed = 0;
  std::vector<DegreeResult> degrees;

  const DegreeResult* find(int m) const;
  /// m -> beta over computed degrees with beta > 0.
  std::map<int, std::int64_t> betas() const;
};

/// Degrees 1..max_degree. Degrees whose largest weight block exceeds the
/// column limit, and every degree after them, are reported as Skipped.
OracleReport betti_table(const OrbitSpec& spec, int max_degree);

}  // namespace orbitlab::oracle
