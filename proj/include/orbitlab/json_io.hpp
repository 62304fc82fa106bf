#pragma once

// JSON schemas shared by the CLI and the reference data file.
//
// Character: {"coeffs": [[q, mult], ...]} with q strictly decreasing. The
// reader also accepts the text form "2s_20 + s_16".

#include <json.hpp>

#include "orbitlab/orbit_oracle.hpp"
#include "orbitlab/repring.hpp"
#include "orbitlab/threshold_pipeline.hpp"

namespace orbitlab::json_io {

using nlohmann::json;

json character_to_json(const repring::Character& ch);
/// ParseError on malformed input, including non-decreasing orders.
repring::Character character_from_json(const json& j);

json weights_to_json(const repring::WeightMultiplicity& w);
repring::WeightMultiplicity weights_from_json(const json& j);

/// ConfigError on schema violations.
pipeline::PipelineConfig pipeline_config_from_json(const json& j);
json pipeline_config_to_json(const pipeline::PipelineConfig& c);

json pipeline_report_to_json(const pipeline::PipelineReport& r);
pipeline::PipelineReport pipeline_report_from_json(const json& j);

json oracle_report_to_json(const oracle::OracleReport& r);
oracle::OracleReport oracle_report_from_json(const json& j);

}  // namespace orbitlab::json_io
