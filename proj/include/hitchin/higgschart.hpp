#pragma once

// Local charts of the Higgs pair attached to (q, M) on the reducible locus.
// Near each p in Supp(D') the bundle is glued from two trivial charts by a unipotent
// transition f_12 = [[1, x_12/2], [0, 1]] and the Higgs field reads
// phi_a = [[i s', y_a], [0, -i s']], subject to i s' x_12 = y_2 - y_1.

#include "hitchin/divisor.hpp"
#include "hitchin/scalar.hpp"
#include "hitchin/series.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace hf {

using Series = Laurent<Gaussian>;

struct Mat2 {
  Series a, b, c, d;  ///< [[a, b], [c, d]]

  Series trace() const { return a + d; }
  Series det() const { return a * d - b * c; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  /// Lowest precision among the entries.
  int precision() const;
};

/// Entrywise equality of all coefficients below `bound` (which must be within precision).
bool agree(const Mat2& x, const Mat2& y, int bound);

struct LocalChartData {
  Point p;
  int multiplicity = 0;   ///< D'(p)
  int truncation = 0;     ///< N = 2 D'(p) + 1
  Jet<Gaussian> s_prime;  ///< order N, valuation exactly D'(p)
  Jet<Gaussian> q_local;  ///< order D'(p)
  Series x_12;            ///< pole order <= D'(p), known to t^{N - D'(p)}
  Series y_1, y_2;
};

struct ChartHiggsPair {
  int m = 0;
  int d = 0;
  LocalChartData data;
  Mat2 f_12;
  Mat2 phi_1, phi_2;
};

/// y_1 = q, y_2 = 0, x_12 = -q / (i s'). Throws DivisionByNonUnit when the coefficient of
/// t^{D'(p)} in s' vanishes, InvalidArgument when q has the wrong length or s' vanishes
/// below D'(p).
LocalChartData solve_gluing(const Jet<Gaussian>& q_local, const Jet<Gaussian>& s_prime_local, const Point& p,
                            int multiplicity);

/// Checks i s' x_12 = y_2 - y_1 mod t^N and y_1 = q mod t^{D'(p)}.
bool gluing_holds(const LocalChartData& data);

/// Throws CompatibilityFailure unless f_12 phi_2 = phi_1 f_12 mod t^N.
ChartHiggsPair build_pair(const LocalChartData& data, int m, int d);

bool trace_zero(const ChartHiggsPair& pair);
/// det(phi_a) = s'^2 on both charts, mod t^N.
bool det_is_s_prime_squared(const ChartHiggsPair& pair);

enum class Stability { Stable, StrictlySemistable, Unstable };
std::string_view to_string(Stability s);
Stability semistability_check(int m, int deg_D, int d);

struct EigenDivisor {
  int k1 = 0;
  std::optional<int> k2;  ///< nullopt when q = 0
  int D_at_p = 0;
};
/// Throws InvariantFailure if ord(q) != D'(p) - D(p) for q != 0 or D(p) leaves [0, D'(p)].
EigenDivisor eigen_divisor(const Jet<Gaussian>& s_prime, const Jet<Gaussian>& q);

/// The (0,1) entry of phi_1 restricted to D'.
Jet<Gaussian> q_extract(const ChartHiggsPair& pair);
/// The same read off chart 2: off-diagonal entry of f_12 phi_2 f_12^{-1}.
Jet<Gaussian> q_extract_chart2(const ChartHiggsPair& pair);
/// Off-diagonal entry after re-splitting chart 1 by [[1, u], [0, 1]] with u holomorphic.
Jet<Gaussian> q_extract_resplit(const ChartHiggsPair& pair, const Jet<Gaussian>& u);

struct ScalarAction {
  ChartHiggsPair pair;  ///< built from beta q
  Gaussian beta;
  Gaussian sqrt_beta;
  Mat2 g;  ///< diag(sqrt_beta^{-1}, sqrt_beta), the same on both charts
  bool transition_ok = false;  ///< g f_12(beta q) = f_12(q) g
  bool higgs_ok = false;       ///< g phi_a(beta q) g^{-1} = phi_a(q), a = 1, 2
};

/// Requires sqrt_beta != 0; beta = sqrt_beta^2.
ScalarAction scalar_action(const ChartHiggsPair& pair, const Gaussian& sqrt_beta);

struct RoundtripOptions {
  std::uint64_t seed = 1;
  int trials = 500;
  int max_multiplicity = 5;
};

struct RoundtripSummary {
  int trials = 0;
  int gluing = 0;
  int compatibility = 0;
  int trace = 0;
  int det = 0;
  int eigen = 0;
  int roundtrip = 0;
  int chart2 = 0;
  int resplit = 0;
  int scalar = 0;
  std::vector<std::string> failures;  ///< one JSON document per failed trial
  bool all_passed() const;
};

RoundtripSummary roundtrip_fuzz(const RoundtripOptions& opts);
nlohmann::ordered_json to_json(const RoundtripSummary& summary, const RoundtripOptions& opts);

nlohmann::ordered_json jet_to_json(const Jet<Gaussian>& j);
nlohmann::ordered_json jet_to_json(const Jet<Rational>& j);
nlohmann::ordered_json series_to_json(const Series& s);

}  // namespace hf
