#include "hitchin/higgschart.hpp"

#include "hitchin/errors.hpp"

#include <nlohmann/json.hpp>

#include <random>

namespace hf {

namespace {

Series exact(const Jet<Gaussian>& j) { return Series::from_jet(j, true); }

Series constant(const Gaussian& v) { return Series::constant(v); }

const Gaussian kI = Gaussian::i();

Mat2 transition(const Series& x12) { return {constant(1), x12 * Gaussian(Rational(1, 2)), Series::zero(), constant(1)}; }

Mat2 higgs(const Series& s, const Series& y) { return {s * kI, y, Series::zero(), s * (-kI)}; }

}  // namespace

int Mat2::precision() const { return std::min({a.precision(), b.precision(), c.precision(), d.precision()}); }

bool agree(const Mat2& x, const Mat2& y, int bound) {
  if (x.precision() < bound || y.precision() < bound) return false;
  return agree(x.a, y.a, bound) && agree(x.b, y.b, bound) && agree(x.c, y.c, bound) && agree(x.d, y.d, bound);
}

LocalChartData solve_gluing(const Jet<Gaussian>& q_local, const Jet<Gaussian>& s_prime_local, const Point& p,
                            int multiplicity) {
  const int n = multiplicity;
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "D'(p) must be positive");
  if (q_local.order() != n) {
    throw Error(ErrorCode::InvalidArgument, "q must have exactly D'(p) = " + std::to_string(n) + " coefficients");
  }
  if (s_prime_local.order() <= n) throw Error(ErrorCode::TruncationTooShort, "s' must be known beyond t^{D'(p)}");
  for (int k = 0; k < n; ++k) {
    if (!is_zero(s_prime_local[k])) throw Error(ErrorCode::InvalidArgument, "s' vanishes to order below D'(p)");
  }
  if (is_zero(s_prime_local[n])) {
    throw Error(ErrorCode::DivisionByNonUnit, "coefficient of t^" + std::to_string(n) + " in s' is zero");
  }

  LocalChartData data;
  data.p = p;
  data.multiplicity = n;
  data.truncation = 2 * n + 1;
  data.s_prime = s_prime_local.order() >= data.truncation ? s_prime_local.truncated(data.truncation)
                                                           : Jet<Gaussian>(data.truncation, s_prime_local.coeffs());
  data.q_local = q_local;
  data.y_1 = exact(q_local);
  data.y_2 = Series::zero();
  data.x_12 = divide(-data.y_1, exact(data.s_prime) * kI, data.truncation - n);
  if (!gluing_holds(data)) throw Error(ErrorCode::InvariantFailure, "gluing identity failed");
  return data;
}

bool gluing_holds(const LocalChartData& data) {
  const Series lhs = exact(data.s_prime) * kI * data.x_12;
  const Series rhs = data.y_2 - data.y_1;
  if (lhs.precision() < data.truncation) return false;
  if (!agree(lhs, rhs, data.truncation)) return false;
  return data.y_1.to_jet(data.multiplicity) == data.q_local;
}

ChartHiggsPair build_pair(const LocalChartData& data, int m, int d) {
  ChartHiggsPair pair;
  pair.m = m;
  pair.d = d;
  pair.data = data;
  const Series s = exact(data.s_prime);
  pair.f_12 = transition(data.x_12);
  pair.phi_1 = higgs(s, data.y_1);
  pair.phi_2 = higgs(s, data.y_2);
  if (!agree(pair.f_12 * pair.phi_2, pair.phi_1 * pair.f_12, data.truncation)) {
    throw Error(ErrorCode::CompatibilityFailure, "f_12 phi_2 != phi_1 f_12 at " + data.p.label());
  }
  return pair;
}

bool trace_zero(const ChartHiggsPair& pair) {
  const int n = pair.data.truncation;
  return agree(pair.phi_1.trace(), Series::zero(), n) && agree(pair.phi_2.trace(), Series::zero(), n);
}

bool det_is_s_prime_squared(const ChartHiggsPair& pair) {
  const int n = pair.data.truncation;
  const Series s = exact(pair.data.s_prime);
  const Series s2 = s * s;
  for (const Mat2* phi : {&pair.phi_1, &pair.phi_2}) {
    const Series det = phi->det();
    if (det.precision() < n || !agree(det, s2, n)) return false;
  }
  return true;
}

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::StrictlySemistable: return "StrictlySemistable";
    case Stability::Unstable: return "Unstable";
  }
  return "Unknown";
}

Stability semistability_check(int m, int deg_D, int d) {
  // Compare 2m and 2m' with d to stay in integers.
  const int other = d - deg_D - m;
  if (2 * m > d || 2 * other > d) return Stability::Unstable;
  if (2 * m == d || 2 * other == d) return Stability::StrictlySemistable;
  return Stability::Stable;
}

EigenDivisor eigen_divisor(const Jet<Gaussian>& s_prime, const Jet<Gaussian>& q) {
  const auto k1 = s_prime.valuation();
  if (!k1) throw Error(ErrorCode::InvalidArgument, "s' is zero to its truncation");
  EigenDivisor e;
  e.k1 = *k1;
  e.k2 = q.valuation();
  e.D_at_p = (e.k2 && e.k1 > *e.k2) ? e.k1 - *e.k2 : 0;
  if (e.D_at_p < 0 || e.D_at_p > e.k1) throw Error(ErrorCode::InvariantFailure, "D(p) outside [0, D'(p)]");
  if (e.k2 && *e.k2 != e.k1 - e.D_at_p) {
    throw Error(ErrorCode::InvariantFailure, "div(q) != D' - D at the point");
  }
  return e;
}

Jet<Gaussian> q_extract(const ChartHiggsPair& pair) { return pair.phi_1.b.to_jet(pair.data.multiplicity); }

Jet<Gaussian> q_extract_chart2(const ChartHiggsPair& pair) {
  const Mat2& f = pair.f_12;
  const Mat2 f_inv{f.a, -f.b, f.c, f.d};
  return (f * pair.phi_2 * f_inv).b.to_jet(pair.data.multiplicity);
}

Jet<Gaussian> q_extract_resplit(const ChartHiggsPair& pair, const Jet<Gaussian>& u) {
  const Series us = exact(u);
  const Mat2 h{constant(1), us, Series::zero(), constant(1)};
  const Mat2 h_inv{constant(1), -us, Series::zero(), constant(1)};
  return (h * pair.phi_1 * h_inv).b.to_jet(pair.data.multiplicity);
}

ScalarAction scalar_action(const ChartHiggsPair& pair, const Gaussian& sqrt_beta) {
  if (is_zero(sqrt_beta)) throw Error(ErrorCode::InvalidArgument, "beta must be nonzero");
  ScalarAction out;
  out.sqrt_beta = sqrt_beta;
  out.beta = sqrt_beta * sqrt_beta;
  const auto& data = pair.data;
  auto scaled = build_pair(solve_gluing(data.q_local * out.beta, data.s_prime, data.p, data.multiplicity),
                           pair.m, pair.d);
  const Gaussian a_inv = Gaussian(1) / sqrt_beta;
  out.g = {constant(a_inv), Series::zero(), Series::zero(), constant(sqrt_beta)};
  const Mat2 g_inv{constant(sqrt_beta), Series::zero(), Series::zero(), constant(a_inv)};

  const int window = data.truncation - data.multiplicity;
  out.transition_ok = agree(out.g * scaled.f_12, pair.f_12 * out.g, window);
  out.higgs_ok = agree(out.g * scaled.phi_1 * g_inv, pair.phi_1, data.truncation) &&
                 agree(out.g * scaled.phi_2 * g_inv, pair.phi_2, data.truncation);
  out.pair = std::move(scaled);
  return out;
}

bool RoundtripSummary::all_passed() const {
  for (int c : {gluing, compatibility, trace, det, eigen, roundtrip, chart2, resplit, scalar})
    if (c != trials) return false;
  return true;
}

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  long between(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Gaussian gaussian() {
    return {fraction(), fraction()};
  }
  Rational fraction() {
    const long num = between(-9, 9);
    const long den = between(1, 4);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Gaussian nonzero() {
    for (;;) {
      auto z = gaussian();
      if (!is_zero(z)) return z;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

RoundtripSummary roundtrip_fuzz(const RoundtripOptions& opts) {
  Draw draw(opts.seed);
  RoundtripSummary sum;
  for (int t = 0; t < opts.trials; ++t) {
    ++sum.trials;
    const int n = static_cast<int>(draw.between(1, opts.max_multiplicity));
    const int order = 2 * n + 1;
    Jet<Gaussian> s(order);
    s[n] = draw.nonzero();
    for (int k = n + 1; k < order; ++k) s[k] = draw.gaussian();
    Jet<Gaussian> q(n);
    const bool zero_q = draw.between(0, 9) == 0;
    if (!zero_q) {
      for (int k = 0; k < n; ++k)
        if (draw.between(0, 2) != 0) q[k] = draw.gaussian();
    }
    Jet<Gaussian> u(order);
    for (int k = 0; k < order; ++k) u[k] = draw.gaussian();
    const Gaussian root = draw.nonzero();
    const int d = static_cast<int>(draw.between(-3, 6));

    std::vector<std::string> failed;
    auto record = [&](bool ok, int& counter, const char* name) {
      if (ok) ++counter;
      else failed.emplace_back(name);
    };
    try {
      const auto data = solve_gluing(q, s, Point("p"), n);
      record(gluing_holds(data), sum.gluing, "gluing");
      std::optional<ChartHiggsPair> pair;
      try {
        pair = build_pair(data, d / 2, d);
        ++sum.compatibility;
      } catch (const Error&) {
        failed.emplace_back("compatibility");
      }
      if (pair) {
        record(trace_zero(*pair), sum.trace, "trace");
        record(det_is_s_prime_squared(*pair), sum.det, "det");
        const auto e = eigen_divisor(s, q);
        const bool consistent = (q.is_zero() == (e.D_at_p == 0)) && e.D_at_p >= 0 && e.D_at_p <= n;
        record(consistent, sum.eigen, "eigen_divisor");
        record(q_extract(*pair) == q, sum.roundtrip, "roundtrip");
        record(q_extract_chart2(*pair) == q, sum.chart2, "chart2");
        record(q_extract_resplit(*pair, u) == q, sum.resplit, "resplit");
        const auto act = scalar_action(*pair, root);
        record(act.transition_ok && act.higgs_ok && q_extract(act.pair) == q * act.beta, sum.scalar, "scalar_action");
      }
    } catch (const Error& err) {
      failed.emplace_back(std::string("exception: ") + err.what());
    }
    if (!failed.empty()) {
      nlohmann::ordered_json j;
      j["trial"] = t;
      j["multiplicity"] = n;
      j["s_prime"] = jet_to_json(s);
      j["q"] = jet_to_json(q);
      j["sqrt_beta"] = jet_to_json(Jet<Gaussian>(1, {root}))[0];
      j["failed"] = failed;
      sum.failures.push_back(j.dump());
    }
  }
  return sum;
}

nlohmann::ordered_json to_json(const RoundtripSummary& s, const RoundtripOptions& opts) {
  nlohmann::ordered_json j;
  j["seed"] = opts.seed;
  j["trials"] = s.trials;
  j["max_multiplicity"] = opts.max_multiplicity;
  nlohmann::ordered_json passed;
  passed["gluing"] = s.gluing;
  passed["compatibility"] = s.compatibility;
  passed["trace"] = s.trace;
  passed["det"] = s.det;
  passed["eigen_divisor"] = s.eigen;
  passed["roundtrip"] = s.roundtrip;
  passed["chart2"] = s.chart2;
  passed["resplit"] = s.resplit;
  passed["scalar_action"] = s.scalar;
  j["passed"] = std::move(passed);
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : s.failures) j["failures"].push_back(nlohmann::ordered_json::parse(f));
  j["ok"] = s.all_passed();
  return j;
}

nlohmann::ordered_json jet_to_json(const Jet<Gaussian>& jet) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& z : jet.coeffs()) {
    nlohmann::ordered_json c;
    c["re"] = to_string(z.re());
    c["im"] = to_string(z.im());
    out.push_back(std::move(c));
  }
  return out;
}

nlohmann::ordered_json jet_to_json(const Jet<Rational>& jet) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& x : jet.coeffs()) out.push_back(to_string(x));
  return out;
}

nlohmann::ordered_json series_to_json(const Series& s) {
  nlohmann::ordered_json j;
  j["low"] = s.low();
  std::vector<Gaussian> coeffs;
  for (int k = s.low(); k < s.high(); ++k) coeffs.push_back(s.coeff(k));
  j["coeffs"] = jet_to_json(Jet<Gaussian>(static_cast<int>(coeffs.size()), coeffs));
  if (s.exact()) j["precision"] = nullptr;
  else j["precision"] = s.precision();
  return j;
}

}  // namespace hf
