// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orbitlab/binary_forms.hpp"
#include "orbitlab/orbit_oracle.hpp"
#include "orbitlab/reference_tables.hpp"
#include "orbitlab/repring.hpp"
#include "orbitlab/threshold_pipeline.hpp"
#include "properties.hpp"

using namespace orbitlab;
using repring::Character;
using repring::parse_character;

namespace {

// Wall-clock limits for the criteria that carry one, in seconds.
constexpr double kLimitPlethysm = 1.0;
constexpr double kLimitThreshold = 1.0;
constexpr double kLimitPipeline = 5.0;
constexpr double kLimitMrc = 1.0;
constexpr double kLimitGenerators = 30.0;
constexpr double kLimitSmallOrders = 600.0;
constexpr double kLimitSeptimic = 3600.0;
constexpr double kLimitCharP = 900.0;

constexpr std::uint64_t kSeeds[] = {1, 2};

struct Result {
  bool pass = true;
  std::string detail;
};

class Log {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (!failures_.empty()) failures_ += "; ";
      failures_ += what;
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  Result result() const { return {pass_, pass_ ? notes_ : failures_}; }

 private:
  bool pass_ = true;
  std::string failures_, notes_;
};

std::string show_betas(const std::map<int, std::int64_t>& b) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [m, n] : b) {
    os << (first ? "" : ", ") << m << ":" << n;
    first = false;
  }
  os << "}";
  return os.str();
}

std::map<int, std::int64_t> upto(const std::map<int, std::int64_t>& b, int top) {
  std::map<int, std::int64_t> out;
  for (const auto& [m, n] : b)
    if (m <= top) out[m] = n;
  return out;
}

// Every oracle report computed in characteristic zero, for the (sharp) check.
std::vector<oracle::OracleReport>& rational_reports() {
  static std::vector<oracle::OracleReport> reports;
  return reports;
}

// Compares an oracle run with the reference betas up to `top` and with every
// tabulated character in range.
void compare_with_table(Log& log, const oracle::OracleReport& rep, int top) {
  const std::string tag = "d=" + std::to_string(rep.d) + " seed " + std::to_string(rep.seed);
  std::map<int, std::int64_t> computed;
  int reached = 0;
  for (const auto& r : rep.degrees) {
    if (r.status != oracle::DegreeStatus::Computed) continue;
    reached = r.m;
    if (r.beta) computed[r.m] = r.beta;
    log.expect(r.agreement, tag + ": lanes disagree at m=" + std::to_string(r.m));
  }
  const auto expected = upto(reference::paper_betas(rep.d), std::min(top, reached));
  log.expect(computed == expected, tag + ": betas " + show_betas(computed) + " expected " + show_betas(expected));
  for (const auto& [m, ch] : reference::paper_characters(rep.d)) {
    if (m > reached) continue;
    const auto* r = rep.find(m);
    log.expect(r && r->char_B == ch, tag + ": char B(0," + std::to_string(m) + ")");
  }
}

oracle::OracleReport run_rational(int d, std::uint64_t seed, int top, std::size_t column_limit = 4000) {
  auto spec = oracle::rational_spec(d, seed);
  spec.column_limit = column_limit;
  auto rep = oracle::betti_table(spec, top);
  rational_reports().push_back(rep);
  return rep;
}

// -- criteria ------------------------------------------------------------------

Result plethysm_golden() {
  Log log;
  const auto c = repring::plethysm_sym(4, 7);
  log.expect(c == parse_character("s_28 + s_24 + s_22 + 2s_20 + s_18 + 3s_16 + 2s_14 + 3s_12 + 2s_10 + 3s_8 + "
                                  "s_6 + 3s_4 + s_0"),
             "s_4 o s_7 = " + repring::to_string(c));
  log.note("s_4 o s_7 = " + repring::to_string(c));
  return log.result();
}

Result threshold_golden() {
  Log log;
  const auto t = pipeline::threshold_character(5, 14);
  log.expect(t == parse_character("s_22 + 4s_18 + 2s_16 + 6s_14 + 3s_12 + 6s_10 + 2s_8 + 5s_6 + s_4 + 3s_2"),
             "T_14 = " + repring::to_string(t));
  log.expect(pipeline::zeta(5, 14, 10) == 17, "zeta(14,10) = " + std::to_string(pipeline::zeta(5, 14, 10)));
  log.note("T_14 = " + repring::to_string(t) + ", zeta(14,10) = 17");
  return log.result();
}

Result pipeline_reproduction() {
  Log log;
  int matched = 0, total = 0;
  std::vector<std::string> invisible;
  for (int d = 5; d <= 10; ++d) {
    const auto report = pipeline::run_pipeline(reference::paper_pipeline_config(d));
    log.expect(!report.halted_at, "d=" + std::to_string(d) + " halted");
    for (const auto& [m, ch] : reference::paper_characters(d)) {
      ++total;
      const auto* rec = report.find(m);
      const bool ok = rec && rec->betti == ch;
      matched += ok;
      log.expect(ok, "d=" + std::to_string(d) + " m=" + std::to_string(m));
    }
    for (const auto& rec : report.degrees)
      if (rec.status == pipeline::Status::InvisibleResolved || rec.status == pipeline::Status::InvisibleUnresolved)
        invisible.push_back("(" + std::to_string(d) + "," + std::to_string(rec.m) + ")");
  }
  std::string inv;
  for (const auto& s : invisible) inv += (inv.empty() ? "" : " ") + s;
  log.expect(inv == "(7,6) (10,6)", "invisible degrees " + inv);
  log.note(std::to_string(matched) + "/" + std::to_string(total) + " characters, invisible at " + inv);
  return log.result();
}

Result mrc_example() {
  Log log;
  const auto p = pipeline::mrc_expected_generators(2, 8, 6);
  log.expect(p.generators == std::map<int, std::int64_t>{{3, 2}, {4, 1}}, "generators " + show_betas(p.generators));
  log.expect(p.ideal_dims.at(3) == 2 && p.ideal_dims.at(4) == 7, "intermediate dims");
  log.note("generators " + show_betas(p.generators) + ", dims 2 and 7");
  return log.result();
}

Result explicit_generators() {
  Log log;
  using forms::BinaryForm;
  const int translates = 20;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-4, 4), big(-50, 50);
    auto random_sl2 = [&] {
      Rational p;
      do p = small(rng);
      while (p == 0);
      const Rational q = small(rng), r = small(rng);
      return forms::Matrix2{p, q, r, (1 + q * r) / p};
    };
    auto random_point = [&](int n) {
      std::vector<Rational> v;
      for (int i = 0; i <= n; ++i) v.push_back(big(rng));
      return v;
    };
    const std::string tag = "seed " + std::to_string(seed);

    const auto E4 = oracle::sample_general_form(4, seed);
    const Poly eq = forms::quartic_defining_equation(E4);
    log.expect(eq.is_homogeneous() && eq.degree() == 6 && eq.degree() == reference::orbit_degree(4),
               tag + ": quartic equation degree " + std::to_string(eq.degree()));
    for (int t = 0; t < translates; ++t)
      log.expect(forms::theta(eq, forms::sl2_substitute(E4, random_sl2())) == 0, tag + ": quartic translate");
    log.expect(eq.evaluate(random_point(4)) != 0, tag + ": quartic equation vanishes at a random point");

    const auto E5 = oracle::sample_general_form(5, seed);
    const auto g = forms::quintic_generators(E5);
    log.expect(g.z8.degree() == 8 && g.z12.degree() == 12, tag + ": quintic generator degrees");
    for (int t = 0; t < translates; ++t) {
      const auto F = forms::sl2_substitute(E5, random_sl2());
      log.expect(forms::theta(g.z8, F) == 0 && forms::theta(g.z12, F) == 0, tag + ": quintic translate");
    }
    const auto x = random_point(5);
    log.expect(g.z8.evaluate(x) != 0 && g.z12.evaluate(x) != 0, tag + ": quintic generator vanishes at a random point");
    // Z'_12 is not a multiple of A Z_8: compare values at two random points.
    const Poly A = forms::evaluate_covariant(forms::covariants::quintic_A(), 5)[0];
    const Poly AZ8 = A * g.z8;
    const auto y = random_point(5);
    log.expect(g.z12.evaluate(x) * AZ8.evaluate(y) != g.z12.evaluate(y) * AZ8.evaluate(x),
               tag + ": Z'_12 proportional to A Z_8");
  }
  log.note("5 seeds x 20 translates, quartic degree 6");
  return log.result();
}

Result oracle_small_orders() {
  Log log;
  const std::pair<int, int> cases[] = {{4, 8}, {5, 14}, {6, 13}};
  for (auto [d, top] : cases)
    for (auto seed : kSeeds) compare_with_table(log, run_rational(d, seed, top), top);
  log.note("d=4 {6:1}, d=5 {8:1, 12:1, 14:60}, d=6 {4:1, 6:1, 10:1, 12:97, 13:27}, characters match, 2 seeds x 2 primes");
  return log.result();
}

Result oracle_septimic() {
  Log log;
  for (auto seed : kSeeds) {
    const auto rep = run_rational(7, seed, 10);
    compare_with_table(log, rep, 10);
    const auto* r6 = rep.find(6);
    log.expect(r6 && r6->char_B == parse_character("s_6 + s_2"), "B(0,6) for seed " + std::to_string(seed));
  }
  log.note("{6:10, 8:40, 9:106, 10:89}, B(0,6) = s_6 + s_2, 2 seeds");
  return log.result();
}

Result oracle_spot_checks() {
  Log log;
  for (auto seed : kSeeds) {
    compare_with_table(log, run_rational(8, seed, 7), 7);
    compare_with_table(log, run_rational(9, seed, 7), 7);
  }
  // d = 10 with a column limit that cuts off after degree 7.
  const std::size_t limit = 1000;
  int skipped = 0;
  for (auto seed : kSeeds) {
    const auto rep = run_rational(10, seed, 10, limit);
    compare_with_table(log, rep, 10);
    for (const auto& r : rep.degrees) {
      const bool over = oracle::largest_block_size(10, r.m) > limit;
      log.expect(over == (r.status == oracle::DegreeStatus::Skipped),
                 "d=10 m=" + std::to_string(r.m) + " skip status");
      skipped += r.status == oracle::DegreeStatus::Skipped;
    }
  }
  log.note("d=8 {4:1, 5:1, 6:7, 7:106}, d=9 {4:1, 6:71, 7:508}, d=10 {4:1, 5:3, 6:367, 7:679}; " +
           std::to_string(skipped / 2) + " degrees SKIPPED at column limit 1000");
  return log.result();
}

Result characteristic_p() {
  Log log;
  const std::pair<std::uint64_t, int> rows[] = {{7, 14}, {5, 14}, {3, 15}, {2, 16}};
  for (auto [p, top] : rows) {
    const auto tabulated = reference::char_p_betas_d5(p);
    const auto expected = upto(tabulated ? *tabulated : reference::paper_betas(5), top);
    for (auto seed : kSeeds) {
      const auto rep = oracle::betti_table(oracle::char_p_spec(5, p, seed), top);
      const auto got = rep.betas();
      log.expect(got == expected, "F_" + std::to_string(p) + " seed " + std::to_string(seed) + ": " +
                                      show_betas(got) + " expected " + show_betas(expected));
      for (const auto& r : rep.degrees)
        log.expect(r.agreement, "F_" + std::to_string(p) + ": point streams disagree at m=" + std::to_string(r.m));
    }
  }
  log.note("F_7 {8:1, 12:1, 13:2, 14:48}, F_5 as in characteristic 0, F_3 to degree 15, F_2 to degree 16, 2 seeds");
  return log.result();
}

Result property_suites() {
  Log log;
  int suites = 0, cases = 0;
  for (const auto& p : props::all_properties()) {
    const auto out = p.run();
    ++suites;
    cases += out.cases;
    log.expect(out.cases >= 200, p.name + ": only " + std::to_string(out.cases) + " cases");
    log.expect(out.ok(), p.name + ": " + out.first_failure);
  }
  // (sharp) on every characteristic-zero table computed above.
  int checked = 0;
  for (const auto& rep : rational_reports()) {
    std::map<int, Character> resolved;
    for (const auto& r : rep.degrees) {
      if (r.status != oracle::DegreeStatus::Computed) break;
      const Character B = r.beta ? *r.char_B : Character{};
      const auto Q = pipeline::qtilde(rep.d, r.m, resolved, {});
      log.expect(repring::geq(B, Q), "(sharp) fails at d=" + std::to_string(rep.d) + " m=" + std::to_string(r.m));
      ++checked;
      if (r.beta) resolved[r.m] = B;
    }
  }
  log.note(std::to_string(suites) + " suites, " + std::to_string(cases) + " cases; (sharp) on " +
           std::to_string(checked) + " oracle degrees");
  return log.result();
}

struct Criterion {
  int id;
  std::string name;
  double limit;  // seconds; 0 = no limit
  std::function<Result()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "plethysm golden", kLimitPlethysm, plethysm_golden},
      {2, "threshold golden", kLimitThreshold, threshold_golden},
      {3, "pipeline reproduction", kLimitPipeline, pipeline_reproduction},
      {4, "maximal rank example", kLimitMrc, mrc_example},
      {5, "explicit generators", kLimitGenerators, explicit_generators},
      {6, "oracle d=4,5,6", kLimitSmallOrders, oracle_small_orders},
      {7, "oracle d=7", kLimitSeptimic, oracle_septimic},
      {8, "oracle d=8..10 spot checks", 0, oracle_spot_checks},
      {9, "characteristic p", kLimitCharP, characteristic_p},
      {10, "property suites", 0, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs > c.limit) {
      r.pass = false;
      r.detail += " [over the " + std::to_string(static_cast<int>(c.limit)) + " s limit]";
    }
    failed += !r.pass;
    std::printf("%s  %2d  %-28s %8.2f s  %s\n", r.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                r.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
