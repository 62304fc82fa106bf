#include "orbitlab/repring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <mutex>
#include <sstream>

#include "orbitlab/errors.hpp"

namespace orbitlab::repring {

namespace {

std::int64_t checked_int64(const mpz_class& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("multiplicity exceeds 64-bit range");
  return v.get_si();
}

// Coefficient list of the Gaussian binomial [b+c choose b]_t, i.e. entry a is
// the number of partitions of a fitting in a b x c box. Shared across threads.
class PartitionTable {
 public:
  const std::vector<mpz_class>& row(long b, long c) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(b, c);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    return cache_.emplace(key, build(b, c)).first->second;
  }

 private:
  // ways[k][s]: multisets of k parts from {1..c} summing to s, for k <= b.
  static std::vector<mpz_class> build(long b, long c) {
    const long top = b * c;
    std::vector<std::vector<mpz_class>> ways(b + 1, std::vector<mpz_class>(top + 1, 0));
    ways[0][0] = 1;
    for (long part = 1; part <= c; ++part) {
      for (long k = 1; k <= b; ++k) {
        for (long s = part; s <= top; ++s) {
          const mpz_class& prev = ways[k - 1][s - part];
          if (prev != 0) ways[k][s] += prev;
        }
      }
    }
    std::vector<mpz_class> out(top + 1, 0);
    for (long k = 0; k <= b; ++k)
      for (long s = 0; s <= top; ++s) out[s] += ways[k][s];
    return out;
  }

  std::mutex mutex_;
  std::map<std::pair<long, long>, std::vector<mpz_class>> cache_;
};

PartitionTable& partition_table() {
  static PartitionTable table;
  return table;
}

}  // namespace

Character::Character(std::initializer_list<std::pair<int, std::int64_t>> terms) {
  for (const auto& [q, m] : terms) add(q, m);
}

Character Character::s(int q, std::int64_t mult) {
  Character c;
  c.add(q, mult);
  return c;
}

std::int64_t Character::operator[](int q) const {
  auto it = coeffs_.find(q);
  return it == coeffs_.end() ? 0 : it->second;
}

void Character::add(int q, std::int64_t mult) {
  if (q < 0) throw std::invalid_argument("negative order in character");
  if (mult == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(q, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) coeffs_.erase(it);
  }
}

bool Character::is_effective() const { return !first_negative().has_value(); }

std::optional<int> Character::first_negative() const {
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    if (it->second < 0) return it->first;
  return std::nullopt;
}

int Character::top() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

Character& Character::operator+=(const Character& other) {
  for (const auto& [q, m] : other.coeffs_) add(q, m);
  return *this;
}

Character& Character::operator-=(const Character& other) {
  for (const auto& [q, m] : other.coeffs_) add(q, -m);
  return *this;
}

Character& Character::operator*=(std::int64_t scalar) {
  if (scalar == 0) {
    coeffs_.clear();
  } else {
    for (auto& [q, m] : coeffs_) m *= scalar;
  }
  return *this;
}

mpz_class partition_count(long a, long b, long c) {
  if (a < 0) return 0;
  if (a == 0) return 1;
  if (b <= 0 || c <= 0 || a > b * c) return 0;
  return partition_table().row(b, c)[a];
}

Character linear_combine(const std::vector<std::pair<std::int64_t, Character>>& terms) {
  Character out;
  for (const auto& [k, ch] : terms) out += k * ch;
  return out;
}

Character product(const Character& a, const Character& b) {
  Character out;
  for (const auto& [p, alpha] : a.coeffs())
    for (const auto& [q, beta] : b.coeffs())
      for (int r = 0; r <= std::min(p, q); ++r) out.add(p + q - 2 * r, alpha * beta);
  return out;
}

Character plethysm_sym(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("plethysm_sym: negative argument");
  Character out;
  const long pq = static_cast<long>(p) * q;
  for (long r = 0; r <= pq / 2; ++r) {
    mpz_class mult = partition_count(r, p, q) - partition_count(r - 1, p, q);
    out.add(static_cast<int>(pq - 2 * r), checked_int64(mult));
  }
  return out;
}

std::int64_t dimension(const Character& ch) {
  std::int64_t total = 0;
  for (const auto& [q, m] : ch.coeffs()) total += m * (q + 1);
  return total;
}

Character sup(const Character& a, const Character& b) {
  Character out;
  auto ia = a.coeffs().begin(), ib = b.coeffs().begin();
  const auto ea = a.coeffs().end(), eb = b.coeffs().end();
  // Missing entries are zero, so max must see them too.
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      out.add(ia->first, std::max<std::int64_t>(ia->second, 0));
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      out.add(ib->first, std::max<std::int64_t>(ib->second, 0));
      ++ib;
    } else {
      out.add(ia->first, std::max(ia->second, ib->second));
      ++ia;
      ++ib;
    }
  }
  return out;
}

bool geq(const Character& a, const Character& b) { return (a - b).is_effective(); }

SupCompare sup_and_compare(const Character& a, const Character& b) { return {sup(a, b), geq(a, b)}; }

WeightMultiplicity to_weights(const Character& ch) {
  WeightMultiplicity w;
  for (const auto& [q, m] : ch.coeffs())
    for (int k = -q; k <= q; k += 2) w[k] += m;
  std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
  return w;
}

Character character_from_weights(const WeightMultiplicity& w) {
  std::optional<int> parity;
  for (const auto& [weight, mult] : w) {
    if (mult == 0) continue;
    if (mult < 0)
      throw NonRepresentationWeights("negative multiplicity at weight " + std::to_string(weight));
    const int par = ((weight % 2) + 2) % 2;
    if (parity && *parity != par) throw NonRepresentationWeights("weights of mixed parity");
    parity = par;
    auto mirror = w.find(-weight);
    if (mirror == w.end() || mirror->second != mult)
      throw NonRepresentationWeights("weights not symmetric at " + std::to_string(weight));
  }
  auto at = [&](int k) -> std::int64_t {
    auto it = w.find(k);
    return it == w.end() ? 0 : it->second;
  };
  Character out;
  if (!parity) return out;
  int top = 0;
  for (const auto& [weight, mult] : w)
    if (mult != 0) top = std::max(top, weight);
  for (int q = *parity; q <= top; q += 2) {
    const std::int64_t mult = at(q) - at(q + 2);
    if (mult < 0)
      throw NonRepresentationWeights("weight multiplicities give negative count of s_" +
                                     std::to_string(q));
    out.add(q, mult);
  }
  return out;
}

std::string to_string(const Character& ch) {
  if (ch.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = ch.coeffs().rbegin(); it != ch.coeffs().rend(); ++it) {
    auto [q, m] = *it;
    if (first) {
      if (m < 0) os << "-";
    } else {
      os << (m < 0 ? " - " : " + ");
    }
    const std::int64_t mag = m < 0 ? -m : m;
    if (mag != 1) os << mag;
    os << "s_" << q;
    first = false;
  }
  return os.str();
}

Character parse_character(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty character expression");
  Character out;
  if (t == "0") return out;
  std::size_t i = 0;
  auto fail = [&] { throw ParseError("cannot parse character '" + text + "'"); };
  while (i < t.size()) {
    std::int64_t sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::int64_t mult = 1;
    std::size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i > start) mult = std::stoll(t.substr(start, i - start));
    if (i + 1 >= t.size() || t[i] != 's' || t[i + 1] != '_') fail();
    i += 2;
    start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i == start) fail();
    out.add(std::stoi(t.substr(start, i - start)), sign * mult);
  }
  return out;
}

}  // namespace orbitlab::repring
