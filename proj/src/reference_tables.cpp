#include "orbitlab/reference_tables.hpp"

#include <cstdlib>
#include <fstream>

#include "orbitlab/errors.hpp"
#include "orbitlab/json_io.hpp"

#ifndef ORBITLAB_DEFAULT_DATA
#define ORBITLAB_DEFAULT_DATA "data/paper_data.json"
#endif

namespace orbitlab::reference {

namespace {

BetaTable read_betas(const nlohmann::json& j) {
  BetaTable t;
  for (const auto& [m, v] : j.items()) t[std::stoi(m)] = v.get<std::int64_t>();
  return t;
}

}  // namespace

PaperData load_paper_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open reference data file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed reference data file '" + path + "': " + e.what());
  }
  PaperData data;
  try {
    for (const auto& [d, entry] : j.at("betas").items()) {
      data.betas[std::stoi(d)] = read_betas(entry.at("values"));
      data.sources["betas/" + d] = entry.value("source", "");
    }
    for (const auto& [d, entry] : j.at("characters").items()) {
      auto& table = data.characters[std::stoi(d)];
      for (const auto& [m, ch] : entry.at("values").items()) table[std::stoi(m)] = json_io::character_from_json(ch);
      data.sources["characters/" + d] = entry.value("source", "");
    }
    const auto& col = j.at("d6_betti_generator_column");
    data.d6_betti_generator_column = read_betas(col.at("values"));
    data.sources["d6_betti_generator_column"] = col.value("source", "");
    const auto& cp = j.at("char_p_d5");
    for (const auto& [p, v] : cp.at("values").items()) {
      if (v.is_string()) {
        if (v.get<std::string>() != "SAME_AS_CHAR_0") throw ConfigError("unknown char-p marker");
        data.char_p_betas_d5[std::stoi(p)] = std::nullopt;
      } else {
        data.char_p_betas_d5[std::stoi(p)] = read_betas(v);
      }
    }
    data.sources["char_p_d5"] = cp.value("source", "");
    if (j.contains("pipeline_adjustments")) {
      for (const auto& [d, entry] : j.at("pipeline_adjustments").items()) {
        PipelineAdjustment adj;
        adj.source = entry.value("source", "");
        if (entry.contains("suppressed"))
          for (int m : entry.at("suppressed")) adj.suppressed.insert(m);
        if (entry.contains("corrections"))
          for (const auto& [m, ch] : entry.at("corrections").items())
            adj.corrections[std::stoi(m)] = json_io::character_from_json(ch);
        data.adjustments[std::stoi(d)] = std::move(adj);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("reference data file '" + path + "' does not match the schema: " + e.what());
  }
  return data;
}

std::string default_data_path() {
  if (const char* env = std::getenv("ORBITLAB_DATA"); env && *env) return env;
  return ORBITLAB_DEFAULT_DATA;
}

const PaperData& paper_data() {
  static const PaperData data = load_paper_data(default_data_path());
  return data;
}

BetaTable paper_betas(int d) {
  if (d < 4 || d > 10) throw UnsupportedOrder("no tabulated generator dimensions for d = " + std::to_string(d));
  const auto& b = paper_data().betas;
  auto it = b.find(d);
  if (it == b.end()) throw UnsupportedOrder("reference data lacks d = " + std::to_string(d));
  return it->second;
}

repring::Character paper_character(int d, int m) {
  const auto& c = paper_data().characters;
  if (auto it = c.find(d); it != c.end())
    if (auto jt = it->second.find(m); jt != it->second.end()) return jt->second;
  throw NotTabulated("no tabulated character for d = " + std::to_string(d) + ", m = " + std::to_string(m));
}

std::map<int, repring::Character> paper_characters(int d) {
  const auto& c = paper_data().characters;
  auto it = c.find(d);
  if (it == c.end()) throw NotTabulated("no tabulated characters for d = " + std::to_string(d));
  return it->second;
}

std::optional<BetaTable> char_p_betas_d5(int p) {
  const auto& t = paper_data().char_p_betas_d5;
  auto it = t.find(p);
  if (it == t.end()) throw NotTabulated("no characteristic-" + std::to_string(p) + " data");
  return it->second;
}

std::int64_t orbit_degree(int d) {
  if (d < 4) throw UnsupportedOrder("orbit closures are threefolds only for d >= 4");
  if (d == 4) return 6;
  return static_cast<std::int64_t>(d) * (d - 1) * (d - 2);
}

pipeline::PipelineConfig paper_pipeline_config(int d) {
  pipeline::PipelineConfig cfg;
  cfg.d = d;
  cfg.betas = paper_betas(d);
  cfg.max_degree = cfg.betas.empty() ? 1 : cfg.betas.rbegin()->first;
  const auto& adj = paper_data().adjustments;
  if (auto it = adj.find(d); it != adj.end()) {
    cfg.suppressed = it->second.suppressed;
    cfg.corrections = it->second.corrections;
  }
  return cfg;
}

}  // namespace orbitlab::reference
