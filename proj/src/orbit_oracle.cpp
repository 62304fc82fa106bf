#include "orbitlab/orbit_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>
#include <type_traits>

#include "orbitlab/errors.hpp"

namespace orbitlab::oracle::detail {

// Field element bundled with its field so the generic substitution formula
// can run over either field type.
template <class Field>
struct FV {
  const Field* F;
  Elem v;
  friend FV operator+(const FV& a, const FV& b) { return {a.F, a.F->add(a.v, b.v)}; }
  friend FV operator*(const FV& a, const FV& b) { return {a.F, a.F->mul(a.v, b.v)}; }
};

}  // namespace orbitlab::oracle::detail

namespace orbitlab {

template <class Field>
struct ScalarOps<oracle::detail::FV<Field>> {
  using V = oracle::detail::FV<Field>;
  static V from_int(long n, const V& like) { return {like.F, like.F->from_int(n)}; }
  static V mul_int(const V& x, const mpz_class& n) {
    const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), x.F->characteristic());
    return {x.F, x.F->mul(x.v, x.F->from_int(static_cast<std::int64_t>(r)))};
  }
  static bool is_zero(const V& x) { return x.F->is_zero(x.v); }
};

}  // namespace orbitlab

namespace orbitlab::oracle {

using detail::FV;

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0;
  for (auto p : parts) h = splitmix64(h ^ p);
  return h;
}

template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next++;
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!err) err = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min<int>(jobs, static_cast<int>(n)); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

// All degree-m monomials in d + 1 variables, bucketed by weight. Global rank
// is the position in descending lexicographic order.
class Layout {
 public:
  struct Block {
    int w;
    std::vector<std::vector<int>> monos;
  };

  Layout(int d, int m) : d_(d), m_(m) {
    const int nv = d + 1;
    comp_.assign(m + 1, std::vector<std::uint64_t>(nv + 1, 0));
    for (int s = 0; s <= m; ++s) {
      comp_[s][1] = 1;
      for (int k = 2; k <= nv; ++k)
        for (int t = 0; t <= s; ++t) comp_[s][k] += comp_[s - t][k - 1];
    }
    std::vector<int> e(nv, 0);
    enumerate(e, 0, m);
  }

  int degree() const { return m_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block* find(int w) const {
    auto it = by_weight_.find(w);
    return it == by_weight_.end() ? nullptr : &blocks_[it->second];
  }
  std::size_t block_index(int w) const { return by_weight_.at(w); }
  /// Position of a degree-m monomial inside its weight block.
  std::uint32_t local_index(const std::vector<int>& e) const { return where_[rank(e)]; }
  std::size_t largest() const {
    std::size_t n = 0;
    for (const auto& b : blocks_) n = std::max(n, b.monos.size());
    return n;
  }

 private:
  std::size_t rank(const std::vector<int>& e) const {
    const int nv = d_ + 1;
    std::size_t r = 0;
    int rem = m_;
    for (int i = 0; i + 1 < nv; ++i) {
      const int k = nv - i - 1;
      for (int v = e[i] + 1; v <= rem; ++v) r += comp_[rem - v][k];
      rem -= e[i];
    }
    return r;
  }

  void enumerate(std::vector<int>& e, int i, int rem) {
    if (i == d_) {
      e[i] = rem;
      const int w = monomial_weight(e, d_);
      auto [it, fresh] = by_weight_.try_emplace(w, blocks_.size());
      if (fresh) blocks_.push_back(Block{w, {}});
      auto& b = blocks_[it->second];
      where_.push_back(static_cast<std::uint32_t>(b.monos.size()));
      b.monos.push_back(e);
      return;
    }
    for (int v = rem; v >= 0; --v) {
      e[i] = v;
      enumerate(e, i + 1, rem - v);
    }
    e[i] = 0;
  }

  int d_, m_;
  std::vector<std::vector<std::uint64_t>> comp_;  // compositions of s into k parts
  std::vector<Block> blocks_;
  std::map<int, std::size_t> by_weight_;
  std::vector<std::uint32_t> where_;  // global rank -> local index
};

std::unique_ptr<Layout> make_layout(int d, int m) { return std::make_unique<Layout>(d, m); }

std::vector<int> sorted_weights(const Layout& L) {
  std::vector<int> ws;
  for (const auto& b : L.blocks()) ws.push_back(b.w);
  std::sort(ws.begin(), ws.end());
  return ws;
}

template <class Field>
struct Lane {
  Field F;
  std::vector<Elem> E;
  std::uint64_t stream;
};

struct BlockOutcome {
  std::vector<std::vector<Elem>> kernel;
  std::int64_t dim_J = 0;
};

// Outcomes parallel to Layout::blocks().
using LaneDegree = std::vector<BlockOutcome>;

template <class Field>
std::vector<std::vector<Elem>> block_kernel(const Lane<Field>& lane, const OrbitSpec& spec, int m, int w,
                                            const std::vector<std::vector<int>>& monos, int attempt) {
  const std::size_t n = monos.size();
  if (n == 0) return {};
  const int d = spec.d;
  const std::size_t rows = n + static_cast<std::size_t>(spec.points_margin);
  const Field& F = lane.F;
  std::mt19937_64 rng(stream_seed({spec.seed, static_cast<std::uint64_t>(m),
                                   static_cast<std::uint64_t>(static_cast<std::int64_t>(w)), lane.stream,
                                   static_cast<std::uint64_t>(attempt)}));
  std::vector<FV<Field>> coeffs;
  for (Elem a : lane.E) coeffs.push_back({&F, a});
  std::vector<Elem> mat(rows * n);
  std::vector<Elem> pw((d + 1) * (m + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    const FV<Field> p{&F, F.random(rng)}, q{&F, F.random(rng)}, rr{&F, F.random(rng)}, s{&F, F.random(rng)};
    const auto psi = spec.coordinates == Coordinates::Monomial
                         ? forms::substitute_monomial_coefficients(coeffs, p, q, rr, s)
                         : forms::substitute_coefficients(coeffs, p, q, rr, s);
    for (int i = 0; i <= d; ++i) {
      Elem* row = &pw[i * (m + 1)];
      row[0] = F.one();
      for (int e = 1; e <= m; ++e) row[e] = F.mul(row[e - 1], psi[i].v);
    }
    Elem* out = &mat[r * n];
    for (std::size_t j = 0; j < n; ++j) {
      Elem v = F.one();
      const auto& e = monos[j];
      for (int i = 0; i <= d; ++i)
        if (e[i]) v = F.mul(v, pw[i * (m + 1) + e[i]]);
      out[j] = v;
    }
  }
  return nullspace(F, mat, rows, n);
}

// Kernels of every block of L and, when `prev` is given, dim J per block.
template <class Field>
LaneDegree lane_degree(const Lane<Field>& lane, const OrbitSpec& spec, const Layout& L, const Layout* prevL,
                       const LaneDegree* prev, int attempt) {
  const auto& blocks = L.blocks();
  LaneDegree out(blocks.size());
  const int d = spec.d;
  parallel_for(blocks.size(), spec.jobs, [&](std::size_t b) {
    const auto& blk = blocks[b];
    auto& res = out[b];
    res.kernel = block_kernel(lane, spec, L.degree(), blk.w, blk.monos, attempt);
    if (!prev || res.kernel.empty()) return;
    const std::size_t target = res.kernel.size();
    RowEchelon<Field> ech(lane.F, blk.monos.size());
    for (int i = 0; i <= d && ech.rank() < target; ++i) {
      const Layout::Block* src = prevL->find(blk.w - (2 * i - d));
      if (!src) continue;
      const auto& kernel = (*prev)[prevL->block_index(src->w)].kernel;
      if (kernel.empty()) continue;
      std::vector<std::uint32_t> target_index(src->monos.size());
      for (std::size_t j = 0; j < src->monos.size(); ++j) {
        auto e = src->monos[j];
        ++e[i];
        target_index[j] = L.local_index(e);
      }
      for (const auto& v : kernel) {
        std::vector<Elem> img(blk.monos.size(), lane.F.zero());
        for (std::size_t j = 0; j < v.size(); ++j)
          if (!lane.F.is_zero(v[j])) img[target_index[j]] = v[j];
        ech.insert(std::move(img));
        if (ech.rank() == target) break;
      }
    }
    res.dim_J = static_cast<std::int64_t>(ech.rank());
  });
  return out;
}

WeightMultiplicity kernel_weights(const Layout& L, const LaneDegree& ld) {
  WeightMultiplicity w;
  for (std::size_t b = 0; b < ld.size(); ++b)
    if (!ld[b].kernel.empty()) w[L.blocks()[b].w] = static_cast<std::int64_t>(ld[b].kernel.size());
  return w;
}

WeightMultiplicity j_weights(const Layout& L, const LaneDegree& ld) {
  WeightMultiplicity w;
  for (std::size_t b = 0; b < ld.size(); ++b)
    if (ld[b].dim_J) w[L.blocks()[b].w] = ld[b].dim_J;
  return w;
}

std::int64_t total(const WeightMultiplicity& w) {
  std::int64_t t = 0;
  for (const auto& [_, v] : w) t += v;
  return t;
}

bool symmetric(const WeightMultiplicity& w) {
  for (const auto& [k, v] : w) {
    auto it = w.find(-k);
    if (it == w.end() || it->second != v) return false;
  }
  return true;
}

std::optional<Character> try_character(const WeightMultiplicity& w) {
  try {
    return repring::character_from_weights(w);
  } catch (const NonRepresentationWeights&) {
    return std::nullopt;
  }
}

std::uint64_t residue(const Rational& x, std::uint64_t p) {
  return mpz_fdiv_ui(x.get_num().get_mpz_t(), p);
}

std::vector<Lane<PrimeField>> rational_lanes(const OrbitSpec& spec) {
  std::vector<Lane<PrimeField>> lanes;
  for (auto p : spec.primes) {
    PrimeField F(p);
    std::vector<Elem> E;
    for (const auto& a : spec.E.coeffs) E.push_back(F.from_int(static_cast<std::int64_t>(residue(a, p))));
    lanes.push_back({F, std::move(E), p});
  }
  return lanes;
}

constexpr std::uint64_t kMinExtensionSize = std::uint64_t(1) << 20;

std::vector<Lane<ExtensionField>> char_p_lanes(const OrbitSpec& spec) {
  ExtensionField F = ExtensionField::with_min_size(spec.p, kMinExtensionSize);
  std::vector<Elem> E;
  if (spec.extension_coefficients) {
    std::mt19937_64 rng(stream_seed({spec.seed, 0xE0, static_cast<std::uint64_t>(spec.d)}));
    do {
      E.clear();
      for (int i = 0; i <= spec.d; ++i) E.push_back(F.random(rng));
    } while (F.is_zero(E.front()) || F.is_zero(E.back()));
  } else {
    for (const auto& a : spec.E.coeffs) E.push_back(F.from_int(static_cast<std::int64_t>(residue(a, spec.p))));
  }
  // Two independent point streams over the same field.
  return {Lane<ExtensionField>{F, E, 1}, Lane<ExtensionField>{F, E, 2}};
}

template <class Fn>
auto with_lanes(const OrbitSpec& spec, Fn&& fn) {
  spec.validate();
  if (spec.mode == Mode::RationalViaModular) {
    auto lanes = rational_lanes(spec);
    return fn(lanes);
  }
  auto lanes = char_p_lanes(spec);
  return fn(lanes);
}

enum class Anomaly { None, Disagreement, Asymmetric, NotRepresentation, Negative };

[[noreturn]] void raise(Anomaly a, int m) {
  const std::string where = " in degree " + std::to_string(m) + " after a retry with fresh points";
  switch (a) {
    case Anomaly::Disagreement: throw PrimeDisagreement("lanes disagree on kernel dimensions" + where);
    case Anomaly::Asymmetric: throw NonRepresentationWeights("kernel dimensions not symmetric in the weight" + where);
    case Anomaly::NotRepresentation: throw NonRepresentationWeights("ideal weights are not a representation" + where);
    case Anomaly::Negative: throw NegativeMultiplicity("generator character has a negative multiplicity" + where);
    case Anomaly::None: break;
  }
  throw std::logic_error("raise without anomaly");
}

struct DegreeSummary {
  WeightMultiplicity weights_I, weights_J, weights_B;
  std::optional<Character> char_I, char_B;
};

// Cross-lane checks; the first lane supplies the reported values.
Anomaly check_degree(const OrbitSpec& spec, const Layout& L, const std::vector<LaneDegree>& cur, bool with_J,
                     DegreeSummary& out) {
  out.weights_I = kernel_weights(L, cur[0]);
  if (with_J) out.weights_J = j_weights(L, cur[0]);
  for (std::size_t k = 1; k < cur.size(); ++k) {
    if (kernel_weights(L, cur[k]) != out.weights_I) return Anomaly::Disagreement;
    if (with_J && j_weights(L, cur[k]) != out.weights_J) return Anomaly::Disagreement;
  }
  if (!symmetric(out.weights_I) || !symmetric(out.weights_J)) return Anomaly::Asymmetric;
  out.weights_B = out.weights_I;
  for (const auto& [w, v] : out.weights_J) {
    out.weights_B[w] -= v;
    if (out.weights_B[w] == 0) out.weights_B.erase(w);
  }
  const bool exact = spec.mode == Mode::RationalViaModular;
  out.char_I = try_character(out.weights_I);
  if (!out.char_I && exact) return Anomaly::NotRepresentation;
  if (with_J) {
    for (const auto& [w, v] : out.weights_B)
      if (v < 0) return Anomaly::Negative;
    out.char_B = try_character(out.weights_B);
    if (!out.char_B && exact) return Anomaly::Negative;
  }
  return Anomaly::None;
}

template <class Field>
class Engine {
 public:
  Engine(const OrbitSpec& spec, std::vector<Lane<Field>>& lanes) : spec_(spec), lanes_(lanes) {}

  /// Kernels (and J when the previous degree is loaded) of degree m on every
  /// lane, retried once with fresh points on any anomaly.
  std::vector<LaneDegree> agreed(const Layout& L, bool with_J, DegreeSummary& summary, int& attempts) {
    Anomaly last = Anomaly::None;
    for (int attempt = 0; attempt < 2; ++attempt) {
      std::vector<LaneDegree> cur;
      for (const auto& lane : lanes_)
        cur.push_back(lane_degree(lane, spec_, L, with_J ? prev_layout_.get() : nullptr,
                                  with_J ? &prev_[cur.size()] : nullptr, attempt));
      summary = DegreeSummary{};
      last = check_degree(spec_, L, cur, with_J, summary);
      attempts = attempt + 1;
      if (last == Anomaly::None) return cur;
    }
    raise(last, L.degree());
  }

  DegreeResult step(int m) {
    auto L = make_layout(spec_.d, m);
    const bool with_J = prev_layout_ != nullptr;
    DegreeSummary s;
    DegreeResult r;
    r.m = m;
    r.largest_block = L->largest();
    auto cur = agreed(*L, with_J, s, r.attempts);
    r.dim_I = total(s.weights_I);
    r.dim_J = total(s.weights_J);
    r.beta = r.dim_I - r.dim_J;
    r.weights_I = s.weights_I;
    r.weights_B = s.weights_B;
    r.char_I = s.char_I;
    r.char_B = with_J ? s.char_B : s.char_I;
    if (!with_J) r.weights_B = s.weights_I;
    if (r.attempts > 1) r.warnings.push_back("lanes needed a retry with fresh points");
    if (prev_dim_I_ > 0 && r.dim_J < prev_dim_I_)
      r.warnings.push_back("dim J_" + std::to_string(m) + " = " + std::to_string(r.dim_J) + " < dim I_" +
                           std::to_string(m - 1) + " = " + std::to_string(prev_dim_I_));
    if (r.char_I && repring::dimension(*r.char_I) != r.dim_I)
      r.warnings.push_back("character dimension differs from dim I");
    prev_ = std::move(cur);
    prev_layout_ = std::move(L);
    prev_dim_I_ = r.dim_I;
    return r;
  }

  /// Seeds the previous degree from externally supplied first-lane kernels.
  void load_previous(const DegreeKernels& k) {
    auto L = make_layout(spec_.d, k.m);
    LaneDegree ld(L->blocks().size());
    for (const auto& blk : k.blocks) {
      const Layout::Block* own = L->find(blk.w);
      if (!own || own->monos != blk.monomials) throw DimensionMismatch("kernel block layout mismatch");
      ld[L->block_index(blk.w)].kernel = blk.basis;
    }
    prev_ = {std::move(ld)};
    prev_layout_ = std::move(L);
  }

 private:
  const OrbitSpec& spec_;
  std::vector<Lane<Field>>& lanes_;
  std::vector<LaneDegree> prev_;
  std::unique_ptr<Layout> prev_layout_;
  std::int64_t prev_dim_I_ = 0;
};

template <class Field>
std::string field_name(const std::vector<Lane<Field>>& lanes) {
  return lanes.front().F.name();
}

}  // namespace

std::vector<std::uint64_t> default_primes() { return {4294967291ULL, 4294967279ULL}; }

void OrbitSpec::validate() const {
  if (d < 1) throw ConfigError("order d must be positive");
  if (E.order() != d)
    throw ConfigError("form has order " + std::to_string(E.order()) + ", expected " + std::to_string(d));
  for (const auto& a : E.coeffs)
    if (a.get_den() != 1) throw ConfigError("oracle forms need integer coefficients");
  if (points_margin < 1) throw ConfigError("points margin must be positive");
  if (column_limit < 1) throw ConfigError("column limit must be positive");
  if (jobs < 1) throw ConfigError("jobs must be positive");
  if (mode == Mode::RationalViaModular) {
    if (primes.size() < 2) throw ConfigError("rational mode needs at least two primes");
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const auto p = primes[i];
      if (p <= (std::uint64_t(1) << 30) || p >= (std::uint64_t(1) << 32) || !is_prime(p))
        throw ConfigError(std::to_string(p) + " is not a prime in (2^30, 2^32)");
      if (std::count(primes.begin(), primes.end(), p) > 1) throw ConfigError("repeated prime " + std::to_string(p));
    }
  } else {
    if (p < 2 || p >= (1u << 16) || !is_prime(p)) throw ConfigError("characteristic must be a prime below 2^16");
    if (!extension_coefficients && (residue(E[0], p) == 0 || residue(E[d], p) == 0))
      throw ConfigError("leading or trailing coefficient vanishes mod " + std::to_string(p));
  }
}

forms::BinaryForm sample_general_form(int d, std::uint64_t seed, int bound, std::uint64_t modulus) {
  if (d < 1) throw std::invalid_argument("order must be positive");
  if (bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  std::mt19937_64 rng(stream_seed({seed, 0x5A, static_cast<std::uint64_t>(d)}));
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  auto ok = [modulus](long v) {
    if (v == 0) return false;
    if (modulus == 0) return true;
    return v % static_cast<long>(modulus) != 0;
  };
  for (;;) {
    std::vector<long> a;
    for (int i = 0; i <= d; ++i) a.push_back(static_cast<long>(rng() % span) - bound);
    if (!ok(a.front()) || !ok(a.back())) continue;
    std::vector<Rational> c(a.begin(), a.end());
    return forms::BinaryForm(std::move(c));
  }
}

OrbitSpec rational_spec(int d, std::uint64_t seed, std::vector<std::uint64_t> primes) {
  OrbitSpec s;
  s.d = d;
  s.E = sample_general_form(d, seed);
  s.mode = Mode::RationalViaModular;
  s.primes = std::move(primes);
  s.seed = seed;
  return s;
}

OrbitSpec char_p_spec(int d, std::uint64_t p, std::uint64_t seed) {
  OrbitSpec s;
  s.d = d;
  s.E = sample_general_form(d, seed, 50, p);
  s.mode = Mode::PrimeField;
  s.extension_coefficients = true;
  s.coordinates = Coordinates::Monomial;
  s.primes.clear();
  s.p = p;
  s.seed = seed;
  return s;
}

std::size_t largest_block_size(int d, int m) {
  if (d < 0 || m < 0) throw std::invalid_argument("negative order or degree");
  const long k = static_cast<long>(m) * d / 2;
  return repring::partition_count(k, m, d).get_ui();
}

int monomial_weight(const std::vector<int>& e, int d) {
  int w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * (2 * static_cast<int>(i) - d);
  return w;
}

std::vector<std::vector<int>> weight_monomials(int d, int m, int w) {
  Layout L(d, m);
  const auto* b = L.find(w);
  return b ? b->monos : std::vector<std::vector<int>>{};
}

const WeightBlockResult* DegreeKernels::find(int w) const {
  for (const auto& b : blocks)
    if (b.w == w) return &b;
  return nullptr;
}

WeightBlockResult kernel_block(const OrbitSpec& spec, int m, int w) {
  return with_lanes(spec, [&](auto& lanes) {
    const auto monos = weight_monomials(spec.d, m, w);
    WeightBlockResult out{m, w, monos, {}, field_name(lanes)};
    for (int attempt = 0; attempt < 2; ++attempt) {
      std::vector<std::vector<std::vector<Elem>>> per_lane;
      for (const auto& lane : lanes) per_lane.push_back(block_kernel(lane, spec, m, w, monos, attempt));
      const bool agree = std::all_of(per_lane.begin(), per_lane.end(),
                                     [&](const auto& k) { return k.size() == per_lane[0].size(); });
      if (agree) {
        out.basis = std::move(per_lane[0]);
        return out;
      }
    }
    raise(Anomaly::Disagreement, m);
  });
}

DegreeKernels degree_kernels(const OrbitSpec& spec, int m) {
  return with_lanes(spec, [&](auto& lanes) {
    using Field = std::decay_t<decltype(lanes.front().F)>;
    Engine<Field> engine(spec, lanes);
    Layout L(spec.d, m);
    DegreeSummary s;
    int attempts = 0;
    auto cur = engine.agreed(L, false, s, attempts);
    DegreeKernels out;
    out.m = m;
    for (int w : sorted_weights(L)) {
      const auto idx = L.block_index(w);
      out.blocks.push_back({m, w, L.blocks()[idx].monos, std::move(cur[0][idx].kernel), field_name(lanes)});
    }
    return out;
  });
}

IdealPiece ideal_character(const OrbitSpec& spec, int m) {
  return with_lanes(spec, [&](auto& lanes) {
    using Field = std::decay_t<decltype(lanes.front().F)>;
    Engine<Field> engine(spec, lanes);
    Layout L(spec.d, m);
    DegreeSummary s;
    int attempts = 0;
    engine.agreed(L, false, s, attempts);
    return IdealPiece{total(s.weights_I), s.weights_I, s.char_I};
  });
}

GeneratorPiece generator_module(const OrbitSpec& spec, const DegreeKernels& previous) {
  return with_lanes(spec, [&](auto& lanes) {
    for (const auto& b : previous.blocks)
      if (b.field != field_name(lanes))
        throw ConfigError("kernels over " + b.field + " cannot be combined with " + field_name(lanes));
    lanes.erase(lanes.begin() + 1, lanes.end());
    using Field = std::decay_t<decltype(lanes.front().F)>;
    Engine<Field> engine(spec, lanes);
    engine.load_previous(previous);
    const DegreeResult r = engine.step(previous.m + 1);
    return GeneratorPiece{r.m, r.dim_I, r.dim_J, r.beta, r.weights_B, r.char_B};
  });
}

std::string to_string(DegreeStatus s) { return s == DegreeStatus::Computed ? "COMPUTED" : "SKIPPED"; }

const DegreeResult* OracleReport::find(int m) const {
  for (const auto& r : degrees)
    if (r.m == m) return &r;
  return nullptr;
}

std::map<int, std::int64_t> OracleReport::betas() const {
  std::map<int, std::int64_t> out;
  for (const auto& r : degrees)
    if (r.status == DegreeStatus::Computed && r.beta > 0) out[r.m] = r.beta;
  return out;
}

OracleReport betti_table(const OrbitSpec& spec, int max_degree) {
  return with_lanes(spec, [&](auto& lanes) {
    using Field = std::decay_t<decltype(lanes.front().F)>;
    OracleReport report;
    report.d = spec.d;
    for (Elem a : lanes.front().E) {
      if constexpr (std::is_same_v<Field, ExtensionField>)
        report.E.push_back(spec.extension_coefficients ? "gf:" + std::to_string(lanes.front().F.encode(a))
                                                       : std::to_string(lanes.front().F.encode(a)));
      else
        report.E.push_back(std::to_string(a));
    }
    if (spec.mode == Mode::RationalViaModular) {
      report.E.clear();
      for (const auto& a : spec.E.coeffs) report.E.push_back(a.get_str());
    }
    report.seed = spec.seed;
    report.field = field_name(lanes);
    report.coordinates = spec.coordinates == Coordinates::Monomial ? "monomial" : "binomial";
    if (spec.mode == Mode::RationalViaModular) {
      report.mode = "rational";
      report.primes = spec.primes;
    } else {
      report.mode = "char_p";
      report.characteristic = spec.p;
    }
    Engine<Field> engine(spec, lanes);
    bool skipping = false;
    for (int m = 1; m <= max_degree; ++m) {
      const std::size_t predicted = largest_block_size(spec.d, m);
      if (skipping || predicted > spec.column_limit) {
        skipping = true;
        DegreeResult r;
        r.m = m;
        r.status = DegreeStatus::Skipped;
        r.largest_block = predicted;
        r.agreement = false;
        r.attempts = 0;
        report.degrees.push_back(std::move(r));
        continue;
      }
      report.degrees.push_back(engine.step(m));
    }
    return report;
  });
}

}  // namespace orbitlab::oracle
