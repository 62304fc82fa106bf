#pragma once

// Threshold characters and the degree-by-degree identification of the
// minimal-generator characters B_m of an orbit-closure ideal.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbitlab/repring.hpp"

namespace orbitlab::pipeline {

using repring::Character;

/// Dimension of the space of covariants of degree m and order q of the
/// generic d-ic; zero when md - q is odd or negative.
std::int64_t zeta(int d, int m, int q);
/// q -> zeta(d, m, q) over all q with a nonzero value.
std::map<int, std::int64_t> zeta_row(int d, int m);

/// sum_q max(0, zeta(d, m, q) - q - 1) s_q.
Character threshold_character(int d, int m);

/// sum over j < m, j not suppressed, of B_j * (s_{m-j} o s_d). Every degree in
/// `required` below m that is neither resolved nor suppressed raises
/// MissingBetti.
Character jtilde(int d, int m, const std::map<int, Character>& resolved, const std::set<int>& suppressed,
                 const std::set<int>& required = {});

/// sup(jtilde, T_m) - jtilde.
Character qtilde(int d, int m, const std::map<int, Character>& resolved, const std::set<int>& suppressed,
                 const std::set<int>& required = {});

struct PipelineConfig {
  int d = 0;
  std::map<int, std::int64_t> betas;
  std::set<int> suppressed;
  std::map<int, Character> corrections;
  int max_degree = 0;

  /// ConfigError on negative betas, non-effective corrections, suppressed
  /// degrees without a beta, or d < 4.
  void validate() const;
};

enum class Status { Visible, InvisibleResolved, InvisibleUnresolved, NoGenerators };
std::string to_string(Status s);

struct DegreeRecord {
  int m = 0;
  std::map<int, std::int64_t> zeta;
  Character threshold;
  Character jtilde;
  Character qtilde;
  Status status = Status::NoGenerators;
  std::int64_t beta = 0;
  /// beta - dim(qtilde).
  std::int64_t gap = 0;
  std::optional<Character> betti;
  bool suppressed = false;
  bool corrected = false;
};

struct PipelineReport {
  int d = 0;
  std::vector<DegreeRecord> degrees;
  /// Degree at which an unresolved invisible gap stopped the run.
  std::optional<int> halted_at;

  const DegreeRecord* find(int m) const;
};

PipelineReport run_pipeline(const PipelineConfig& config);

/// Aligned text table: one row per degree with generators.
std::string render_table(const PipelineReport& report);

struct MrcPrediction {
  std::map<int, std::int64_t> ideal_dims;  // k_m = max(0, binom(m+n, n) - points)
  std::map<int, std::int64_t> generators;  // only degrees with new generators
};

/// Maximal-rank heuristic for the generator degrees of the ideal of general
/// points in P^n, for degrees 1..max_degree.
MrcPrediction mrc_expected_generators(int n, std::int64_t num_points, int max_degree);

}  // namespace orbitlab::pipeline
