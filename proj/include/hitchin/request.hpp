#pragma once

// Analysis requests as they arrive from the command line or a JSON file.
//
// The JSON form mirrors the "input" block echoed in a fibre report, so a report's
// input can be fed straight back:
//   {"g": 2, "d_L": 2, "d": 0, "D_s": "4p" | {"points": [...]}, "reducible": false,
//    "options": {"emit_strata": true, "emit_graph": true}}
// d_L may be omitted and is then deg(D_s)/2; d defaults to 0.

#include "hitchin/spectral.hpp"

#include <string>

#include <nlohmann/json_fwd.hpp>

namespace hf {

struct AnalysisRequest {
  BaseData base;
  SectionData section;
  ReportOptions options;
};

/// Throws ValidationError pointing at the offending field.
AnalysisRequest parse_request(const nlohmann::json& j);

/// Errors about the shape of D_s surface as ValidationError("/D_s"); a broken
/// dimension or connectedness identity stays an InvariantFailure.
nlohmann::ordered_json analyze(const AnalysisRequest& req);

/// D' given as text ("2p+q"), a JSON string, or the JSON object form. Must be effective
/// and nonzero; g >= 2.
StrataContext strata_request(int g, int d, const std::string& dprime);

}  // namespace hf
