#include "hitchin/errors.hpp"
#include "hitchin/higgschart.hpp"
#include "hitchin/parmod.hpp"
#include "hitchin/redfibre.hpp"
#include "hitchin/request.hpp"
#include "hitchin/sweep.hpp"

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>

namespace py = pybind11;

namespace {

std::string analyze(const std::string& request) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(request);
  } catch (const nlohmann::json::parse_error& e) {
    throw hf::ValidationError("", std::string("malformed JSON: ") + e.what());
  }
  return hf::analyze(hf::parse_request(j)).dump();
}

std::string strata(int g, int d, const std::string& dprime) {
  return hf::strata_report(hf::strata_request(g, d, dprime)).dump();
}

std::string verify_example(int m, bool case2, int order) {
  if (m < 2 || m % 2 != 0) throw hf::ValidationError("/m", "m must be even and >= 2");
  if (case2 && m % 4 != 0) throw hf::ValidationError("/m", "the Case 2 subspace needs m divisible by 4");
  const auto w = case2 ? hf::case2_witness(m, order) : hf::nonfibration_witness(m, order);
  return hf::to_json(w).dump();
}

std::string roundtrip(std::uint64_t seed, int trials, int max_multiplicity) {
  if (trials < 1) throw hf::ValidationError("/trials", "must be >= 1");
  if (max_multiplicity < 1) throw hf::ValidationError("/max_multiplicity", "must be >= 1");
  hf::RoundtripOptions opts;
  opts.seed = seed;
  opts.trials = trials;
  opts.max_multiplicity = max_multiplicity;
  return hf::to_json(hf::roundtrip_fuzz(opts), opts).dump();
}

std::string sweep(std::uint64_t seed) { return hf::to_json(hf::run_sweep({seed})).dump(); }

std::string parse_divisor(const std::string& text) {
  nlohmann::ordered_json j = hf::Divisor::parse(text);
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact fibre structure for the rank-2 Hitchin map (JSON in, JSON out)";

  static py::exception<hf::Error> error(m, "HitchinError", PyExc_RuntimeError);
  static py::exception<hf::ValidationError> validation(m, "ValidationError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const hf::ValidationError& e) {
      PyErr_SetObject(validation.ptr(), py::make_tuple(e.detail(), e.path()).ptr());
    } catch (const hf::Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(e.what(), std::string(hf::to_string(e.code()))).ptr());
    }
  });

  m.def("analyze", &analyze, py::arg("request"));
  m.def("strata", &strata, py::arg("g"), py::arg("d"), py::arg("dprime"));
  m.def("verify_example", &verify_example, py::arg("m"), py::arg("case2") = false, py::arg("order") = 0);
  m.def("roundtrip", &roundtrip, py::arg("seed") = 1, py::arg("trials") = 500, py::arg("max_multiplicity") = 5);
  m.def("sweep", &sweep, py::arg("seed") = hf::SweepOptions{}.seed);
  m.def("parse_divisor", &parse_divisor, py::arg("text"));
}
