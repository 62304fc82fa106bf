#pragma once

// Golden data transcribed from published tables: generator dimensions,
// generator characters and characteristic-p generator dimensions. Loaded
// once from a JSON file (ORBITLAB_DATA overrides the default path) and
// immutable afterwards.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "orbitlab/repring.hpp"
#include "orbitlab/threshold_pipeline.hpp"

namespace orbitlab::reference {

using BetaTable = std::map<int, std::int64_t>;

struct PipelineAdjustment {
  std::set<int> suppressed;
  std::map<int, repring::Character> corrections;
  std::string source;
};

struct PaperData {
  std::map<int, BetaTable> betas;
  std::map<int, std::map<int, repring::Character>> characters;
  BetaTable d6_betti_generator_column;
  /// p -> table, or nullopt for "same as characteristic zero".
  std::map<int, std::optional<BetaTable>> char_p_betas_d5;
  std::map<int, PipelineAdjustment> adjustments;
  std::map<std::string, std::string> sources;  // "betas/5" -> description
};

PaperData load_paper_data(const std::string& path);
/// Path used by paper_data(): $ORBITLAB_DATA if set, else the installed default.
std::string default_data_path();
/// Process-wide instance, loaded on first use.
const PaperData& paper_data();

/// UnsupportedOrder unless 4 <= d <= 10.
BetaTable paper_betas(int d);
/// NotTabulated when (d, m) has no displayed character.
repring::Character paper_character(int d, int m);
std::map<int, repring::Character> paper_characters(int d);
/// nullopt means "same as characteristic zero"; NotTabulated for other p.
std::optional<BetaTable> char_p_betas_d5(int p);

std::int64_t orbit_degree(int d);

/// Paper betas plus the documented suppression / correction inputs for d;
/// max_degree is the last tabulated degree.
pipeline::PipelineConfig paper_pipeline_config(int d);

}  // namespace orbitlab::reference
