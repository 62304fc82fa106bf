#include "orbitlab/json_io.hpp"

#include <charconv>

#include "orbitlab/errors.hpp"

namespace orbitlab::json_io {

using repring::Character;

json character_to_json(const Character& ch) {
  json coeffs = json::array();
  const auto& c = ch.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) coeffs.push_back({it->first, it->second});
  return json{{"coeffs", coeffs}};
}

Character character_from_json(const json& j) {
  if (j.is_string()) return repring::parse_character(j.get<std::string>());
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
    throw ParseError("character must be a string or {\"coeffs\": [[q, mult], ...]}");
  Character ch;
  std::optional<int> last;
  for (const auto& term : j.at("coeffs")) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_number_integer())
      throw ParseError("character term must be [q, mult]: " + term.dump());
    const int q = term[0].get<int>();
    if (q < 0) throw ParseError("negative order in character term " + term.dump());
    if (last && q >= *last) throw ParseError("character orders must be strictly decreasing");
    last = q;
    ch.add(q, term[1].get<std::int64_t>());
  }
  return ch;
}

json weights_to_json(const repring::WeightMultiplicity& w) {
  json out = json::array();
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->first, it->second});
  return out;
}

repring::WeightMultiplicity weights_from_json(const json& j) {
  repring::WeightMultiplicity w;
  for (const auto& t : j) w[t.at(0).get<int>()] = t.at(1).get<std::int64_t>();
  return w;
}

namespace {

template <class Fn>
auto schema(const std::string& what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ConfigError(what + " does not match its schema: " + e.what());
  }
}

json optional_character(const std::optional<Character>& c) {
  return c ? character_to_json(*c) : json(nullptr);
}

std::optional<Character> read_optional_character(const json& j) {
  if (j.is_null()) return std::nullopt;
  return character_from_json(j);
}

int degree_key(const std::string& key) {
  int m = 0;
  const auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), m);
  if (ec != std::errc() || end != key.data() + key.size())
    throw ConfigError("degree key '" + key + "' is not an integer");
  return m;
}

}  // namespace

pipeline::PipelineConfig pipeline_config_from_json(const json& j) {
  return schema("pipeline config", [&] {
    pipeline::PipelineConfig c;
    c.d = j.at("d").get<int>();
    if (j.contains("betas"))
      for (const auto& [m, b] : j.at("betas").items()) c.betas[degree_key(m)] = b.get<std::int64_t>();
    if (j.contains("suppressed"))
      for (const auto& m : j.at("suppressed")) c.suppressed.insert(m.get<int>());
    if (j.contains("corrections"))
      for (const auto& [m, ch] : j.at("corrections").items()) c.corrections[degree_key(m)] = character_from_json(ch);
    if (j.contains("max_degree"))
      c.max_degree = j.at("max_degree").get<int>();
    else
      c.max_degree = c.betas.empty() ? 0 : c.betas.rbegin()->first;
    return c;
  });
}

json pipeline_config_to_json(const pipeline::PipelineConfig& c) {
  json betas = json::object(), corrections = json::object();
  for (const auto& [m, b] : c.betas) betas[std::to_string(m)] = b;
  for (const auto& [m, ch] : c.corrections) corrections[std::to_string(m)] = character_to_json(ch);
  return json{{"d", c.d},
              {"betas", betas},
              {"suppressed", json(std::vector<int>(c.suppressed.begin(), c.suppressed.end()))},
              {"corrections", corrections},
              {"max_degree", c.max_degree}};
}

namespace {

pipeline::Status status_from_string(const std::string& s) {
  using pipeline::Status;
  for (auto st : {Status::Visible, Status::InvisibleResolved, Status::InvisibleUnresolved, Status::NoGenerators})
    if (pipeline::to_string(st) == s) return st;
  throw ParseError("unknown pipeline status '" + s + "'");
}

}  // namespace

json pipeline_report_to_json(const pipeline::PipelineReport& r) {
  json degrees = json::array();
  for (const auto& rec : r.degrees) {
    json zeta = json::array();
    for (auto it = rec.zeta.rbegin(); it != rec.zeta.rend(); ++it) zeta.push_back({it->first, it->second});
    degrees.push_back({{"m", rec.m},
                       {"zeta", zeta},
                       {"threshold", character_to_json(rec.threshold)},
                       {"jtilde", character_to_json(rec.jtilde)},
                       {"qtilde", character_to_json(rec.qtilde)},
                       {"status", pipeline::to_string(rec.status)},
                       {"beta", rec.beta},
                       {"gap", rec.gap},
                       {"betti", optional_character(rec.betti)},
                       {"suppressed", rec.suppressed},
                       {"corrected", rec.corrected}});
  }
  return json{{"d", r.d},
              {"halted_at", r.halted_at ? json(*r.halted_at) : json(nullptr)},
              {"degrees", degrees}};
}

pipeline::PipelineReport pipeline_report_from_json(const json& j) {
  return schema("pipeline report", [&] {
    pipeline::PipelineReport r;
    r.d = j.at("d").get<int>();
    if (!j.at("halted_at").is_null()) r.halted_at = j.at("halted_at").get<int>();
    for (const auto& d : j.at("degrees")) {
      pipeline::DegreeRecord rec;
      rec.m = d.at("m").get<int>();
      for (const auto& t : d.at("zeta")) rec.zeta[t.at(0).get<int>()] = t.at(1).get<std::int64_t>();
      rec.threshold = character_from_json(d.at("threshold"));
      rec.jtilde = character_from_json(d.at("jtilde"));
      rec.qtilde = character_from_json(d.at("qtilde"));
      rec.status = status_from_string(d.at("status").get<std::string>());
      rec.beta = d.at("beta").get<std::int64_t>();
      rec.gap = d.at("gap").get<std::int64_t>();
      rec.betti = read_optional_character(d.at("betti"));
      rec.suppressed = d.at("suppressed").get<bool>();
      rec.corrected = d.at("corrected").get<bool>();
      r.degrees.push_back(std::move(rec));
    }
    return r;
  });
}

json oracle_report_to_json(const oracle::OracleReport& r) {
  json degrees = json::array();
  for (const auto& d : r.degrees) {
    degrees.push_back({{"m", d.m},
                       {"status", oracle::to_string(d.status)},
                       {"dim_I", d.dim_I},
                       {"dim_J", d.dim_J},
                       {"beta", d.beta},
                       {"char_I", optional_character(d.char_I)},
                       {"char_B0", optional_character(d.char_B)},
                       {"weights_I", weights_to_json(d.weights_I)},
                       {"weights_B0", weights_to_json(d.weights_B)},
                       {"primes", r.primes},
                       {"agreement", d.agreement},
                       {"attempts", d.attempts},
                       {"largest_block", d.largest_block},
                       {"warnings", d.warnings}});
  }
  return json{{"d", r.d},
              {"E", r.E},
              {"mode", r.mode},
              {"characteristic", r.characteristic},
              {"field", r.field},
              {"coordinates", r.coordinates},
              {"primes", r.primes},
              {"seed", r.seed},
              {"degrees", degrees}};
}

oracle::OracleReport oracle_report_from_json(const json& j) {
  return schema("oracle report", [&] {
    oracle::OracleReport r;
    r.d = j.at("d").get<int>();
    r.E = j.at("E").get<std::vector<std::string>>();
    r.mode = j.at("mode").get<std::string>();
    r.characteristic = j.at("characteristic").get<std::uint64_t>();
    r.field = j.at("field").get<std::string>();
    r.coordinates = j.at("coordinates").get<std::string>();
    r.primes = j.at("primes").get<std::vector<std::uint64_t>>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& d : j.at("degrees")) {
      oracle::DegreeResult x;
      x.m = d.at("m").get<int>();
      const auto st = d.at("status").get<std::string>();
      if (st == "COMPUTED")
        x.status = oracle::DegreeStatus::Computed;
      else if (st == "SKIPPED")
        x.status = oracle::DegreeStatus::Skipped;
      else
        throw ParseError("unknown oracle status '" + st + "'");
      x.dim_I = d.at("dim_I").get<std::int64_t>();
      x.dim_J = d.at("dim_J").get<std::int64_t>();
      x.beta = d.at("beta").get<std::int64_t>();
      x.char_I = read_optional_character(d.at("char_I"));
      x.char_B = read_optional_character(d.at("char_B0"));
      x.weights_I = weights_from_json(d.at("weights_I"));
      x.weights_B = weights_from_json(d.at("weights_B0"));
      x.agreement = d.at("agreement").get<bool>();
      x.attempts = d.at("attempts").get<int>();
      x.largest_block = d.at("largest_block").get<std::size_t>();
      x.warnings = d.at("warnings").get<std::vector<std::string>>();
      r.degrees.push_back(std::move(x));
    }
    return r;
  });
}

}  // namespace orbitlab::json_io
