#include "hitchin/request.hpp"

#include "hitchin/errors.hpp"

#include <array>
#include <string_view>

#include <nlohmann/json.hpp>

namespace hf {

namespace {

int get_int(const nlohmann::json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw ValidationError("/" + key, "expected an integer");
  const auto x = v.get<long long>();
  if (x < -1000000 || x > 1000000) throw ValidationError("/" + key, "out of range");
  return static_cast<int>(x);
}

bool get_bool(const nlohmann::json& j, const std::string& key, const std::string& path) {
  const auto& v = j.at(key);
  if (!v.is_boolean()) throw ValidationError(path, "expected true or false");
  return v.get<bool>();
}

}  // namespace

AnalysisRequest parse_request(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("", "request must be a JSON object");
  static constexpr std::array<std::string_view, 6> known{"g", "d_L", "d", "D_s", "reducible", "options"};
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || key == k;
    if (!ok) throw ValidationError("/" + key, "unknown field");
  }

  AnalysisRequest req;
  if (!j.contains("g")) throw ValidationError("/g", "missing");
  req.base.g = get_int(j, "g");
  if (j.contains("d")) req.base.d = get_int(j, "d");

  if (!j.contains("D_s")) throw ValidationError("/D_s", "missing");
  try {
    req.section.D_s = divisor_from_any(j.at("D_s"));
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError("/D_s", e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("/D_s", e.what());
  }

  if (j.contains("d_L")) {
    req.base.d_L = get_int(j, "d_L");
  } else {
    if (req.section.D_s.degree() % 2 != 0) throw ValidationError("/D_s", "odd degree, cannot infer d_L");
    req.base.d_L = req.section.D_s.degree() / 2;
  }
  if (j.contains("reducible")) req.section.L_is_square_root_of_D_half = get_bool(j, "reducible", "/reducible");

  if (j.contains("options")) {
    const auto& o = j.at("options");
    if (!o.is_object()) throw ValidationError("/options", "expected an object");
    for (const auto& [key, value] : o.items()) {
      if (key == "emit_strata")
        req.options.emit_strata = get_bool(o, key, "/options/emit_strata");
      else if (key == "emit_graph")
        req.options.emit_graph = get_bool(o, key, "/options/emit_graph");
      else
        throw ValidationError("/options/" + key, "unknown field");
    }
  }
  req.base.validate();
  return req;
}

nlohmann::ordered_json analyze(const AnalysisRequest& req) {
  try {
    return to_json(fibre_report(req.base, req.section), req.options);
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::DegreeMismatch:
      case ErrorCode::OddCuspCount:
      case ErrorCode::InvalidArgument:
        throw ValidationError("/D_s", e.what());
      default:
        throw;
    }
  }
}

StrataContext strata_request(int g, int d, const std::string& dprime) {
  if (g < 2) throw ValidationError("/g", "genus must be >= 2");
  Divisor dp;
  try {
    const auto first = dprime.find_first_not_of(" \t\n");
    if (first != std::string::npos && (dprime[first] == '{' || dprime[first] == '"'))
      dp = divisor_from_any(nlohmann::json::parse(dprime));
    else
      dp = Divisor::parse(dprime);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("/dprime", e.what());
  } catch (const Error& e) {
    throw ValidationError("/dprime", e.what());
  }
  if (!dp.is_effective() || dp.degree() < 1) throw ValidationError("/dprime", "D' must be effective and nonzero");
  return StrataContext(g, d, dp);
}

}  // namespace hf
