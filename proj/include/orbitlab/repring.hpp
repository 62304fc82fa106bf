#pragma once

// Arithmetic in the representation ring of SL2.
//
// A Character is a finite integer combination of the symbols s_q, where s_q is
// the class of the (q+1)-dimensional irreducible representation S_q. Negative
// multiplicities are legal ring elements; callers that need an actual
// representation check effectivity explicitly.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace orbitlab::repring {

class Character {
 public:
  using Map = std::map<int, std::int64_t>;

  Character() = default;
  /// Builds from (q, multiplicity) pairs; repeated orders are summed.
  Character(std::initializer_list<std::pair<int, std::int64_t>> terms);

  /// The irreducible s_q with the given multiplicity.
  static Character s(int q, std::int64_t mult = 1);

  std::int64_t operator[](int q) const;
  void add(int q, std::int64_t mult);

  const Map& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  bool is_effective() const;
  /// Largest order carrying a negative multiplicity, if any.
  std::optional<int> first_negative() const;
  /// Largest order in the support, or -1 for the zero character.
  int top() const;

  Character& operator+=(const Character& other);
  Character& operator-=(const Character& other);
  Character& operator*=(std::int64_t scalar);

  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(std::int64_t k, Character a) { return a *= k; }
  friend bool operator==(const Character&, const Character&) = default;

 private:
  Map coeffs_;  // q -> nonzero multiplicity
};

/// Torus weight w -> multiplicity.
using WeightMultiplicity = std::map<int, std::int64_t>;

/// Number of partitions of `a` into at most `b` parts, each part <= `c`.
mpz_class partition_count(long a, long b, long c);

Character linear_combine(const std::vector<std::pair<std::int64_t, Character>>& terms);

/// Clebsch-Gordan product.
Character product(const Character& a, const Character& b);

/// Character of Sym^p(S_q) via the Cayley-Sylvester formula.
Character plethysm_sym(int p, int q);

/// sum of alpha_q (q + 1).
std::int64_t dimension(const Character& ch);

Character sup(const Character& a, const Character& b);
/// Componentwise a >= b.
bool geq(const Character& a, const Character& b);

struct SupCompare {
  Character sup;
  bool a_geq_b;
};
SupCompare sup_and_compare(const Character& a, const Character& b);

/// Expands a character to its weight multiplicities (s_q has weights q, q-2, ..., -q).
WeightMultiplicity to_weights(const Character& ch);

/// Highest-weight reconstruction; throws NonRepresentationWeights when the
/// weights are not symmetric, mix parities, or give a negative multiplicity.
Character character_from_weights(const WeightMultiplicity& w);

/// "2s_20 + 5s_16 - s_0"; the zero character prints as "0".
std::string to_string(const Character& ch);

/// Parses the text form produced by to_string (spaces optional).
Character parse_character(const std::string& text);

}  // namespace orbitlab::repring
