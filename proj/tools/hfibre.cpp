#include "hitchin/errors.hpp"
#include "hitchin/higgschart.hpp"
#include "hitchin/parmod.hpp"
#include "hitchin/redfibre.hpp"
#include "hitchin/request.hpp"
#include "hitchin/sweep.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kInvariant = 1;
constexpr int kValidation = 2;

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("hfibre");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  auto level = spdlog::level::warn;
  if (const char* env = std::getenv("HF_LOG")) level = spdlog::level::from_str(env);
  spdlog::set_level(level);
}

void emit(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int fail(int code, const std::string& kind, const std::string& path, const std::string& message) {
  nlohmann::ordered_json err{{"error", kind}, {"path", path}, {"message", message}};
  std::cerr << err.dump() << '\n';
  return code;
}

struct AnalyzeArgs {
  std::optional<int> g, d, dl;
  std::optional<std::string> ds;
  bool reducible = false;
  std::string json_file;
  bool no_strata = false;
  bool no_graph = false;
};

nlohmann::json request_json(const AnalyzeArgs& a) {
  if (!a.json_file.empty()) {
    std::ifstream in(a.json_file);
    if (!in) throw hf::ValidationError("", "cannot open " + a.json_file);
    try {
      return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw hf::ValidationError("", std::string("malformed JSON: ") + e.what());
    }
  }
  nlohmann::json j = nlohmann::json::object();
  if (a.g) j["g"] = *a.g;
  if (a.d) j["d"] = *a.d;
  if (a.dl) j["d_L"] = *a.dl;
  if (a.ds) j["D_s"] = *a.ds;
  j["reducible"] = a.reducible;
  return j;
}

int run_analyze(const AnalyzeArgs& a) {
  auto req = hf::parse_request(request_json(a));
  if (a.no_strata) req.options.emit_strata = false;
  if (a.no_graph) req.options.emit_graph = false;
  spdlog::info("analyze g={} d_L={} d={} D_s={}", req.base.g, req.base.d_L, req.base.d, req.section.D_s.to_string());
  emit(hf::analyze(req));
  return kOk;
}

int run_strata(int g, int d, const std::string& dprime) {
  const auto ctx = hf::strata_request(g, d, dprime);
  spdlog::info("strata g={} d={} D'={}", g, d, ctx.d_prime.to_string());
  emit(hf::strata_report(ctx));
  return kOk;
}

int run_verify(int m, bool case2, int order) {
  if (m < 2 || m % 2 != 0) throw hf::ValidationError("/m", "m must be even and >= 2");
  if (case2 && m % 4 != 0) throw hf::ValidationError("/m", "the Case 2 subspace needs m divisible by 4");
  if (order < 0) throw hf::ValidationError("/order", "must be >= 0");
  const auto w = case2 ? hf::case2_witness(m, order) : hf::nonfibration_witness(m, order);
  nlohmann::ordered_json out{{"result", w.passed() ? "PASS" : "FAIL"}, {"case", case2 ? 2 : 1}};
  out.update(hf::to_json(w));
  emit(out);
  return w.passed() ? kOk : kInvariant;
}

int run_roundtrip(const hf::RoundtripOptions& opts) {
  if (opts.trials < 1) throw hf::ValidationError("/trials", "must be >= 1");
  if (opts.max_multiplicity < 1) throw hf::ValidationError("/max_multiplicity", "must be >= 1");
  const auto summary = hf::roundtrip_fuzz(opts);
  for (const auto& f : summary.failures) spdlog::warn("roundtrip failure: {}", f);
  emit(hf::to_json(summary, opts));
  return summary.all_passed() ? kOk : kInvariant;
}

int run_grid(const hf::SweepOptions& opts) {
  const auto results = hf::run_sweep(opts);
  bool ok = true;
  for (const auto& r : results) {
    spdlog::info("criterion {}: {} checks, {} failures", r.id, r.checks, r.failures);
    ok = ok && r.passed();
  }
  emit(hf::to_json(results));
  return ok ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();

  CLI::App app{"hfibre: exact fibre structure for the rank-2 Hitchin map"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Fibre report for one base point");
  auto* json_opt = analyze->add_option("--json", an.json_file, "Request file");
  for (auto* o : {analyze->add_option("--g", an.g, "Genus of X"),
                  analyze->add_option("--d", an.d, "Degree of the determinant"),
                  analyze->add_option("--dl", an.dl, "Degree of L (default deg D_s / 2)"),
                  analyze->add_option("--ds", an.ds, "Divisor of s, e.g. 2p+2q"),
                  analyze->add_flag("--reducible", an.reducible, "L is a square root of O(D_s)")})
    o->excludes(json_opt);
  analyze->add_flag("--no-strata", an.no_strata, "Omit the strata table");
  analyze->add_flag("--no-graph", an.no_graph, "Omit the connectivity graph");

  int sg = 2, sd = 0;
  std::string dprime;
  auto* strata = app.add_subcommand("strata", "Strata of the reducible fibre");
  strata->add_option("--g", sg, "Genus of X")->required();
  strata->add_option("--d", sd, "Degree of the determinant")->required();
  strata->add_option("--dprime", dprime, "D' as text or JSON")->required();

  int vm = 0, vorder = 0;
  bool vcase2 = false;
  auto* verify = app.add_subcommand("verify-example", "Check the non-fibration example at an A_{m-1} node");
  verify->add_option("--m", vm, "Multiplicity (even)")->required();
  verify->add_flag("--case2", vcase2, "Use the Case 2 subspace (m divisible by 4)");
  verify->add_option("--order", vorder, "Jet order (0 picks the smallest meaningful one)");

  hf::RoundtripOptions rt;
  auto* roundtrip = app.add_subcommand("roundtrip", "Fuzz the chart-level Higgs pair construction");
  roundtrip->add_option("--seed", rt.seed, "RNG seed");
  roundtrip->add_option("--trials", rt.trials, "Number of trials");
  roundtrip->add_option("--max-mult", rt.max_multiplicity, "Largest multiplicity of D' at p");

  hf::SweepOptions sw;
  auto* sweep = app.add_subcommand("sweep", "Run the full verification grid");
  sweep->add_option("--seed", sw.seed, "RNG seed for the randomized criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kValidation, "usage", "", e.what());
  }

  try {
    if (*analyze) return run_analyze(an);
    if (*strata) return run_strata(sg, sd, dprime);
    if (*verify) return run_verify(vm, vcase2, vorder);
    if (*roundtrip) return run_roundtrip(rt);
    if (*sweep) return run_grid(sw);
  } catch (const hf::ValidationError& e) {
    return fail(kValidation, "validation", e.path(), e.detail());
  } catch (const hf::Error& e) {
    if (e.code() == hf::ErrorCode::InvariantFailure) return fail(kInvariant, "invariant", "", e.what());
    return fail(kValidation, std::string(hf::to_string(e.code())), "", e.what());
  }
  return kOk;
}
