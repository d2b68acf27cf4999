#pragma once

// The full verification grid: every structural identity swept over the ranges used to
// accept a build. Shared by `hfibre sweep` and the acceptance test.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace hf {

struct CriterionResult {
  int id = 0;
  std::string name;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> samples;  ///< first few failure descriptions

  bool passed() const { return checks > 0 && failures == 0; }
};

struct SweepOptions {
  std::uint64_t seed = 20240601;
};

CriterionResult check_irreducible_dimension(const SweepOptions& opts);  // 1
CriterionResult check_genus_bookkeeping(const SweepOptions& opts);      // 2
CriterionResult check_reducible_strata(const SweepOptions& opts);       // 3
CriterionResult check_lattice_laws(const SweepOptions& opts);           // 4
CriterionResult check_nonfibration(const SweepOptions& opts);           // 5
CriterionResult check_homomorphism(const SweepOptions& opts);           // 6
CriterionResult check_invertibility(const SweepOptions& opts);          // 7
CriterionResult check_higgs_roundtrip(const SweepOptions& opts);        // 8
CriterionResult check_embedding(const SweepOptions& opts);              // 9

/// All nine, in order.
std::vector<CriterionResult> run_sweep(const SweepOptions& opts = {});

nlohmann::ordered_json to_json(const std::vector<CriterionResult>& results);

/// Integer partitions of n, parts in non-increasing order, in reverse lexicographic order.
std::vector<std::vector<int>> partitions(int n);

}  // namespace hf
