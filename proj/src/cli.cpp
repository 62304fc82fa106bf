#include "orbitlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "orbitlab/binary_forms.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/json_io.hpp"
#include "orbitlab/orbit_oracle.hpp"
#include "orbitlab/reference_tables.hpp"
#include "orbitlab/threshold_pipeline.hpp"

namespace orbitlab::cli {

using json_io::json;
using repring::Character;

namespace {

struct Emit {
  std::string text;
  json doc;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<std::uint64_t> parse_u64_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoull(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("not a list of integers: '" + s + "'");
    }
  }
  return out;
}

json form_json(const forms::BinaryForm& f) {
  json c = json::array();
  for (const auto& a : f.coeffs) c.push_back(a.get_str());
  return json{{"order", f.order()}, {"coeffs", c}};
}

forms::BinaryForm read_form(const std::string& text, int order, const std::string& flag) {
  auto f = forms::parse_form(text);
  if (order >= 0 && f.order() != order)
    throw DimensionMismatch(flag + " has " + std::to_string(f.order() + 1) + " coefficients, expected " +
                            std::to_string(order + 1));
  return f;
}

// -- oracle ------------------------------------------------------------------

std::string render_oracle(const oracle::OracleReport& r) {
  std::ostringstream os;
  os << "d = " << r.d << ", E = (";
  for (std::size_t i = 0; i < r.E.size(); ++i) os << (i ? "," : "") << r.E[i];
  os << "), " << r.field << ", " << r.coordinates << " coordinates";
  if (!r.primes.empty()) {
    os << ", primes";
    for (auto p : r.primes) os << " " << p;
  }
  os << ", seed " << r.seed << "\n";
  os << std::setw(4) << "m" << " | " << std::setw(7) << "dim I" << " | " << std::setw(7) << "dim J" << " | "
     << std::setw(5) << "beta" << " | " << std::setw(8) << "status" << " | B(0,m)\n";
  for (const auto& d : r.degrees) {
    if (d.status == oracle::DegreeStatus::Skipped) {
      os << std::setw(4) << d.m << " | " << std::setw(7) << "-" << " | " << std::setw(7) << "-" << " | "
         << std::setw(5) << "-" << " | " << std::setw(8) << "SKIPPED" << " | largest block " << d.largest_block
         << "\n";
      continue;
    }
    os << std::setw(4) << d.m << " | " << std::setw(7) << d.dim_I << " | " << std::setw(7) << d.dim_J << " | "
       << std::setw(5) << d.beta << " | " << std::setw(8) << "COMPUTED" << " | "
       << (d.beta == 0 ? std::string("0") : d.char_B ? repring::to_string(*d.char_B) : std::string("n/a"))
       << "\n";
    for (const auto& w : d.warnings) os << "     warning: " << w << "\n";
  }
  return os.str();
}

// -- verify ------------------------------------------------------------------

struct Check {
  std::string name;
  int degree = 0;
  std::string expected, actual;
  bool ok = false;
};

std::vector<Check> verify_checks(int d, const std::set<int>& degrees, bool deep, std::uint64_t seed, int jobs,
                                 std::size_t column_limit) {
  std::vector<Check> checks;
  const auto betas = reference::paper_betas(d);
  const auto chars = reference::paper_characters(d);
  auto wanted = [&](int m) { return degrees.empty() || degrees.count(m); };

  // Transcription: every tabulated character has the tabulated dimension.
  for (const auto& [m, ch] : chars) {
    if (!wanted(m)) continue;
    const auto it = betas.find(m);
    const std::int64_t b = it == betas.end() ? 0 : it->second;
    checks.push_back({"table dimension", m, std::to_string(b), std::to_string(repring::dimension(ch)),
                      repring::dimension(ch) == b});
  }

  const auto report = pipeline::run_pipeline(reference::paper_pipeline_config(d));
  for (const auto& [m, ch] : chars) {
    if (!wanted(m)) continue;
    const auto* rec = report.find(m);
    const std::string actual = rec && rec->betti ? repring::to_string(*rec->betti) : "unresolved";
    checks.push_back({"pipeline character", m, repring::to_string(ch), actual, rec && rec->betti == ch});
  }

  if (deep) {
    int top = 0;
    for (const auto& [m, b] : betas)
      if (wanted(m)) top = std::max(top, m);
    auto spec = oracle::rational_spec(d, seed);
    spec.jobs = jobs;
    spec.column_limit = column_limit;
    const auto rep = oracle::betti_table(spec, top);
    for (const auto& r : rep.degrees) {
      if (!wanted(r.m)) continue;
      const auto it = betas.find(r.m);
      const std::int64_t b = it == betas.end() ? 0 : it->second;
      if (r.status == oracle::DegreeStatus::Skipped) {
        checks.push_back({"oracle beta (skipped)", r.m, std::to_string(b), "SKIPPED", true});
        continue;
      }
      checks.push_back({"oracle beta", r.m, std::to_string(b), std::to_string(r.beta), r.beta == b});
      if (auto c = chars.find(r.m); c != chars.end()) {
        const std::string actual = r.char_B ? repring::to_string(*r.char_B) : "n/a";
        checks.push_back({"oracle character", r.m, repring::to_string(c->second), actual, r.char_B == c->second});
      }
    }
  }
  return checks;
}

// -- dispatch ----------------------------------------------------------------

struct Options {
  std::string format = "text";
  // char
  std::string ch_a, ch_b;
  int pl_p = 0, pl_q = 0;
  // threshold / oracle / verify
  int d = 0, m = 0, max_degree = 0;
  std::uint64_t seed = 1;
  std::string primes;
  std::uint64_t char_p = 0;
  int jobs = 1;
  std::size_t column_limit = 4000;
  std::string degrees;
  bool deep = false;
  // pipeline
  std::string config;
  bool use_paper_betas = false;
  // transvect
  int order_a = -1, order_b = -1, r = 0;
  std::string coeffs_a, coeffs_b, e;
  // mrc
  int n = 0;
  std::int64_t points = 0;
};

Emit run_char_mul(const Options& o) {
  const Character c = repring::product(repring::parse_character(o.ch_a), repring::parse_character(o.ch_b));
  return {repring::to_string(c) + "\n", json_io::character_to_json(c)};
}

Emit run_char_plethysm(const Options& o) {
  const Character c = repring::plethysm_sym(o.pl_p, o.pl_q);
  return {repring::to_string(c) + "\n", json_io::character_to_json(c)};
}

Emit run_char_dim(const Options& o) {
  const auto n = repring::dimension(repring::parse_character(o.ch_a));
  return {std::to_string(n) + "\n", json{{"dimension", n}}};
}

Emit run_threshold(const Options& o) {
  if (o.d < 1 || o.m < 1) throw ConfigError("--d and --m must be positive");
  const Character t = pipeline::threshold_character(o.d, o.m);
  json zeta = json::array();
  const auto row = pipeline::zeta_row(o.d, o.m);
  for (auto it = row.rbegin(); it != row.rend(); ++it) zeta.push_back({it->first, it->second});
  return {repring::to_string(t) + "\n",
          json{{"d", o.d}, {"m", o.m}, {"zeta", zeta}, {"threshold", json_io::character_to_json(t)}}};
}

Emit run_pipeline_cmd(const Options& o) {
  std::ifstream in(o.config);
  if (!in) throw ConfigError("cannot open config file '" + o.config + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("config file '" + o.config + "' is not JSON: " + e.what());
  }
  pipeline::PipelineConfig cfg;
  if (o.use_paper_betas) {
    if (!j.contains("d")) throw ConfigError("config needs \"d\"");
    cfg = reference::paper_pipeline_config(j.at("d").get<int>());
    const auto given = json_io::pipeline_config_from_json(j);
    if (j.contains("suppressed")) cfg.suppressed = given.suppressed;
    if (j.contains("corrections")) cfg.corrections = given.corrections;
    if (j.contains("max_degree")) cfg.max_degree = given.max_degree;
  } else {
    cfg = json_io::pipeline_config_from_json(j);
  }
  const auto report = pipeline::run_pipeline(cfg);
  return {pipeline::render_table(report), json_io::pipeline_report_to_json(report)};
}

Emit run_oracle_cmd(const Options& o) {
  if (o.max_degree < 1) throw ConfigError("--max-degree must be positive");
  oracle::OrbitSpec spec;
  if (o.char_p) {
    if (!o.primes.empty()) throw ConfigError("--primes and --char-p are mutually exclusive");
    spec = oracle::char_p_spec(o.d, o.char_p, o.seed);
  } else {
    spec = oracle::rational_spec(o.d, o.seed,
                                 o.primes.empty() ? oracle::default_primes() : parse_u64_list(o.primes));
  }
  spec.jobs = o.jobs;
  spec.column_limit = o.column_limit;
  const auto report = oracle::betti_table(spec, o.max_degree);
  return {render_oracle(report), json_io::oracle_report_to_json(report)};
}

Emit run_transvect(const Options& o) {
  const auto A = read_form(o.coeffs_a, o.order_a, "--a");
  const auto B = read_form(o.coeffs_b, o.order_b, "--b");
  const auto T = forms::transvectant(A, B, o.r);
  return {forms::format_form(T) + "\n", form_json(T)};
}

Emit run_defining_eq(const Options& o) {
  if (o.d != 4) throw UnsupportedOrder("explicit defining equation is available for d = 4 only");
  const auto E = read_form(o.e, 4, "--e");
  const Poly eq = forms::quartic_defining_equation(E);
  return {eq.to_string() + "\n",
          json{{"d", 4}, {"E", form_json(E)}, {"degree", eq.degree()}, {"polynomial", eq.to_string()}}};
}

Emit run_quintic_gens(const Options& o) {
  const auto E = read_form(o.e, 5, "--e");
  const auto g = forms::quintic_generators(E);
  return {"Z8 = " + g.z8.to_string() + "\nZ12 = " + g.z12.to_string() + "\n",
          json{{"E", form_json(E)}, {"z8", g.z8.to_string()}, {"z12", g.z12.to_string()}}};
}

Emit run_mrc(const Options& o) {
  const auto pred = pipeline::mrc_expected_generators(o.n, o.points, o.max_degree);
  std::ostringstream os;
  json dims = json::object(), gens = json::object();
  for (const auto& [m, k] : pred.ideal_dims) {
    dims[std::to_string(m)] = k;
    const auto it = pred.generators.find(m);
    const std::int64_t g = it == pred.generators.end() ? 0 : it->second;
    os << "m = " << m << ": dim I_m = " << k << ", generators " << g << "\n";
  }
  for (const auto& [m, g] : pred.generators) gens[std::to_string(m)] = g;
  return {os.str(),
          json{{"n", o.n}, {"points", o.points}, {"ideal_dims", dims}, {"generators", gens}}};
}

std::pair<Emit, bool> run_verify(const Options& o) {
  std::set<int> degrees;
  if (!o.degrees.empty())
    for (auto m : parse_u64_list(o.degrees)) degrees.insert(static_cast<int>(m));
  const auto checks = verify_checks(o.d, degrees, o.deep, o.seed, o.jobs, o.column_limit);
  const bool passed = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
  std::ostringstream os;
  json arr = json::array();
  for (const auto& c : checks) {
    os << (c.ok ? "PASS" : "FAIL") << "  m=" << std::setw(2) << c.degree << "  " << c.name << ": "
       << c.actual;
    if (!c.ok) os << " (expected " << c.expected << ")";
    os << "\n";
    arr.push_back({{"name", c.name}, {"m", c.degree}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
  }
  os << (passed ? "all checks passed" : "verification FAILED") << " for d = " << o.d << "\n";
  return {{os.str(), json{{"d", o.d}, {"deep", o.deep}, {"checks", arr}, {"passed", passed}}}, passed};
}

bool is_usage_error(const Error& e) {
  const auto& k = e.kind();
  return k == "ConfigError" || k == "ParseError" || k == "UnsupportedOrder" || k == "DimensionMismatch";
}

}  // namespace

CommandOutcome run_command(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Orbit-closure ideals of binary forms: characters, thresholds, generators."};
  app.name("orbitlab");
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* ch = app.add_subcommand("char", "Representation-ring arithmetic");
  ch->require_subcommand(1);
  auto* mul = ch->add_subcommand("mul", "Clebsch-Gordan product of two characters");
  mul->add_option("--a", o.ch_a, "First character, e.g. \"s_2 + s_0\"")->required();
  mul->add_option("--b", o.ch_b, "Second character")->required();
  auto* pl = ch->add_subcommand("plethysm", "Character of Sym^p(S_q)");
  pl->add_option("--p", o.pl_p)->required()->check(CLI::NonNegativeNumber);
  pl->add_option("--q", o.pl_q)->required()->check(CLI::NonNegativeNumber);
  auto* dim = ch->add_subcommand("dim", "Dimension of a character");
  dim->add_option("--a", o.ch_a)->required();

  auto* th = app.add_subcommand("threshold", "Threshold character T_m");
  th->add_option("--d", o.d)->required();
  th->add_option("--m", o.m)->required();

  auto* pp = app.add_subcommand("pipeline", "Identify generator characters degree by degree");
  pp->add_option("--config", o.config, "JSON pipeline configuration")->required();
  pp->add_flag("--use-paper-betas", o.use_paper_betas, "Take betas and adjustments from the reference data");

  auto* orc = app.add_subcommand("oracle", "Compute generator dimensions by modular linear algebra");
  orc->add_option("--d", o.d)->required();
  orc->add_option("--max-degree", o.max_degree)->required();
  orc->add_option("--seed", o.seed)->required();
  orc->add_option("--primes", o.primes, "Comma-separated primes in (2^30, 2^32)");
  orc->add_option("--char-p", o.char_p, "Work in characteristic P");
  orc->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  orc->add_option("--column-limit", o.column_limit)->check(CLI::PositiveNumber);

  auto* tv = app.add_subcommand("transvect", "Transvectant of two binary forms");
  tv->add_option("--order-a", o.order_a)->required();
  tv->add_option("--order-b", o.order_b)->required();
  tv->add_option("--r", o.r)->required();
  tv->add_option("--a", o.coeffs_a, "Binomial-convention coefficients a_0,...,a_n")->required();
  tv->add_option("--b", o.coeffs_b)->required();

  auto* de = app.add_subcommand("defining-eq", "Defining equation of a quartic orbit closure");
  de->add_option("--d", o.d)->required();
  de->add_option("--e", o.e)->required();

  auto* qg = app.add_subcommand("quintic-gens", "Degree-8 and degree-12 generators for a quintic");
  qg->add_option("--e", o.e)->required();

  auto* mr = app.add_subcommand("mrc", "Maximal-rank generator prediction for general points");
  mr->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  mr->add_option("--points", o.points)->required()->check(CLI::NonNegativeNumber);
  mr->add_option("--max-degree", o.max_degree)->required()->check(CLI::PositiveNumber);

  auto* vf = app.add_subcommand("verify", "Check pipeline (and optionally oracle) against reference data");
  vf->add_option("--d", o.d)->required();
  vf->add_option("--degrees", o.degrees, "Comma-separated degrees to check");
  vf->add_flag("--deep", o.deep, "Also recompute betas with the oracle");
  vf->add_option("--seed", o.seed, "Oracle seed for --deep");
  vf->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  vf->add_option("--column-limit", o.column_limit)->check(CLI::PositiveNumber);

  CommandOutcome out;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out.payload = app.help();
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_code = kUsage;
    out.diagnostics = std::string("usage error: ") + e.what() + "\nRun with --help for usage.\n";
    return out;
  }

  try {
    Emit emit;
    bool passed = true;
    if (mul->parsed()) emit = run_char_mul(o);
    else if (pl->parsed()) emit = run_char_plethysm(o);
    else if (dim->parsed()) emit = run_char_dim(o);
    else if (th->parsed()) emit = run_threshold(o);
    else if (pp->parsed()) emit = run_pipeline_cmd(o);
    else if (orc->parsed()) emit = run_oracle_cmd(o);
    else if (tv->parsed()) emit = run_transvect(o);
    else if (de->parsed()) emit = run_defining_eq(o);
    else if (qg->parsed()) emit = run_quintic_gens(o);
    else if (mr->parsed()) emit = run_mrc(o);
    else if (vf->parsed()) std::tie(emit, passed) = run_verify(o);
    out.payload = o.format == "json" ? dump(emit.doc) : emit.text;
    out.exit_code = passed ? kOk : kMismatch;
  } catch (const Error& e) {
    out.exit_code = is_usage_error(e) ? kUsage : kFailure;
    out.diagnostics = "error: " + e.kind() + ": " + e.what() + "\n";
  } catch (const std::exception& e) {
    out.exit_code = kFailure;
    out.diagnostics = std::string("error: ") + e.what() + "\n";
  }
  return out;
}

}  // namespace orbitlab::cli
