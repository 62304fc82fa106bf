#include "orbitlab/threshold_pipeline.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "orbitlab/errors.hpp"

namespace orbitlab::pipeline {

using repring::dimension;

std::int64_t zeta(int d, int m, int q) {
  const long top = static_cast<long>(m) * d - q;
  if (top < 0 || top % 2 != 0) return 0;
  mpz_class v = repring::partition_count(top / 2, m, d) - repring::partition_count(top / 2 - 1, m, d);
  if (!v.fits_slong_p()) throw std::overflow_error("zeta exceeds 64 bits");
  return v.get_si();
}

std::map<int, std::int64_t> zeta_row(int d, int m) {
  std::map<int, std::int64_t> row;
  for (int q = 0; q <= m * d; ++q)
    if (auto z = zeta(d, m, q); z != 0) row[q] = z;
  return row;
}

Character threshold_character(int d, int m) {
  Character t;
  for (const auto& [q, z] : zeta_row(d, m)) t.add(q, std::max<std::int64_t>(0, z - q - 1));
  return t;
}

Character jtilde(int d, int m, const std::map<int, Character>& resolved, const std::set<int>& suppressed,
                 const std::set<int>& required) {
  for (int j : required) {
    if (j >= m) break;
    if (!suppressed.count(j) && !resolved.count(j))
      throw MissingBetti("generator character in degree " + std::to_string(j) + " is unresolved");
  }
  Character out;
  for (const auto& [j, b] : resolved) {
    if (j >= m) break;
    if (suppressed.count(j) || b.empty()) continue;
    out += repring::product(b, repring::plethysm_sym(m - j, d));
  }
  return out;
}

Character qtilde(int d, int m, const std::map<int, Character>& resolved, const std::set<int>& suppressed,
                 const std::set<int>& required) {
  const Character j = jtilde(d, m, resolved, suppressed, required);
  return repring::sup(j, threshold_character(d, m)) - j;
}

void PipelineConfig::validate() const {
  if (d < 4) throw ConfigError("order d must be at least 4, got " + std::to_string(d));
  if (max_degree < 1) throw ConfigError("max_degree must be positive");
  for (const auto& [m, b] : betas) {
    if (m < 1) throw ConfigError("beta listed for degree " + std::to_string(m));
    if (b < 0) throw ConfigError("negative beta in degree " + std::to_string(m));
  }
  for (int m : suppressed)
    if (!betas.count(m)) throw ConfigError("suppressed degree " + std::to_string(m) + " has no beta");
  for (const auto& [m, c] : corrections)
    if (auto neg = c.first_negative())
      throw ConfigError("correction in degree " + std::to_string(m) + " has negative multiplicity at s_" +
                        std::to_string(*neg));
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Visible: return "VISIBLE";
    case Status::InvisibleResolved: return "INVISIBLE_RESOLVED";
    case Status::InvisibleUnresolved: return "INVISIBLE_UNRESOLVED";
    case Status::NoGenerators: return "NO_GENERATORS";
  }
  return "?";
}

const DegreeRecord* PipelineReport::find(int m) const {
  for (const auto& r : degrees)
    if (r.m == m) return &r;
  return nullptr;
}

namespace {

Character apply_correction(const DegreeRecord& rec, const Character& correction) {
  Character b = rec.qtilde + correction;
  if (dimension(b) != rec.beta)
    throw ConfigError("correction in degree " + std::to_string(rec.m) + " gives dimension " +
                      std::to_string(dimension(b)) + ", expected " + std::to_string(rec.beta));
  return b;
}

void check_record(const DegreeRecord& rec) {
  if (!rec.jtilde.is_effective())
    throw std::logic_error("jtilde not effective in degree " + std::to_string(rec.m));
  if (!rec.betti) return;
  if (!repring::geq(*rec.betti, rec.qtilde))
    throw std::logic_error("resolved character violates B >= Q in degree " + std::to_string(rec.m));
  if (rec.status == Status::Visible && (*rec.betti != rec.qtilde || dimension(*rec.betti) != rec.beta))
    throw std::logic_error("visible degree " + std::to_string(rec.m) + " inconsistent");
}

}  // namespace

PipelineReport run_pipeline(const PipelineConfig& config) {
  config.validate();
  PipelineReport report;
  report.d = config.d;
  std::map<int, Character> resolved;
  std::set<int> required;
  for (const auto& [m, b] : config.betas)
    if (b > 0) required.insert(m);

  for (int m = 1; m <= config.max_degree; ++m) {
    DegreeRecord rec;
    rec.m = m;
    rec.zeta = zeta_row(config.d, m);
    rec.threshold = threshold_character(config.d, m);
    rec.jtilde = jtilde(config.d, m, resolved, config.suppressed, required);
    rec.qtilde = repring::sup(rec.jtilde, rec.threshold) - rec.jtilde;
    if (auto it = config.betas.find(m); it != config.betas.end()) rec.beta = it->second;
    rec.gap = rec.beta - dimension(rec.qtilde);
    const auto corr = config.corrections.find(m);
    const bool has_corr = corr != config.corrections.end() && !corr->second.empty();

    if (config.suppressed.count(m)) {
      // Excluded from later jtilde sums; still resolved when the data allow it.
      rec.suppressed = true;
      rec.status = Status::NoGenerators;
      if (rec.gap == 0 && !has_corr) {
        rec.betti = rec.qtilde;
      } else if (has_corr) {
        rec.betti = apply_correction(rec, corr->second);
        rec.corrected = true;
      }
    } else if (rec.beta == 0) {
      if (has_corr)
        throw ConfigError("correction supplied for degree " + std::to_string(m) + " without generators");
      rec.status = Status::NoGenerators;
      if (rec.gap == 0) rec.betti = Character{};
    } else if (rec.gap == 0) {
      if (has_corr)
        throw ConfigError("correction supplied for visible degree " + std::to_string(m));
      rec.status = Status::Visible;
      rec.betti = rec.qtilde;
    } else if (has_corr && rec.gap > 0) {
      rec.status = Status::InvisibleResolved;
      rec.betti = apply_correction(rec, corr->second);
      rec.corrected = true;
    } else {
      rec.status = Status::InvisibleUnresolved;
    }

    check_record(rec);
    if (rec.betti && !rec.suppressed && rec.beta > 0) resolved[m] = *rec.betti;
    const bool halt = rec.status == Status::InvisibleUnresolved;
    report.degrees.push_back(std::move(rec));
    if (halt) {
      report.halted_at = m;
      break;
    }
  }
  return report;
}

std::string render_table(const PipelineReport& report) {
  std::ostringstream os;
  os << "d = " << report.d << "\n";
  os << std::setw(4) << "m" << " | " << std::setw(5) << "beta" << " | " << std::setw(7) << "dim Q~"
     << " | " << std::setw(20) << std::left << "status" << std::right << " | B_m\n";
  os << std::string(4, '-') << "-+-" << std::string(5, '-') << "-+-" << std::string(7, '-') << "-+-"
     << std::string(20, '-') << "-+-" << std::string(24, '-') << "\n";
  for (const auto& r : report.degrees) {
    if (r.beta == 0 && r.qtilde.empty() && !r.suppressed) continue;
    os << std::setw(4) << r.m << " | " << std::setw(5) << r.beta << " | " << std::setw(7)
       << dimension(r.qtilde) << " | " << std::setw(20) << std::left
       << (to_string(r.status) + (r.suppressed ? "*" : "")) << std::right << " | "
       << (r.betti ? repring::to_string(*r.betti) : std::string("?")) << "\n";
  }
  if (report.halted_at) os << "halted at degree " << *report.halted_at << " (unresolved invisible generators)\n";
  if (std::any_of(report.degrees.begin(), report.degrees.end(), [](const auto& r) { return r.suppressed; }))
    os << "* suppressed: excluded from later Jtilde sums\n";
  return os.str();
}

MrcPrediction mrc_expected_generators(int n, std::int64_t num_points, int max_degree) {
  if (n < 0 || num_points < 0) throw std::invalid_argument("mrc: negative input");
  MrcPrediction out;
  std::int64_t prev = 0;  // k_0: the ideal has nothing in degree 0
  for (int m = 1; m <= max_degree; ++m) {
    mpz_class forms;
    mpz_bin_uiui(forms.get_mpz_t(), static_cast<unsigned long>(m + n), static_cast<unsigned long>(n));
    mpz_class k = forms - num_points;
    if (k < 0) k = 0;
    if (!k.fits_slong_p()) throw std::overflow_error("mrc dimensions exceed 64 bits");
    const std::int64_t km = k.get_si();
    out.ideal_dims[m] = km;
    const std::int64_t rank_max = std::min<std::int64_t>(prev * (n + 1), km);
    if (km - rank_max > 0) out.generators[m] = km - rank_max;
    prev = km;
  }
  return out;
}

}  // namespace orbitlab::pipeline
