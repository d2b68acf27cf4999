#include "hitchin/sweep.hpp"

#include "hitchin/errors.hpp"
#include "hitchin/higgschart.hpp"
#include "hitchin/localring.hpp"
#include "hitchin/parmod.hpp"
#include "hitchin/redfibre.hpp"
#include "hitchin/spectral.hpp"

#include <nlohmann/json.hpp>

#include <random>

namespace hf {

namespace {

constexpr std::size_t kSamples = 5;

class Tally {
 public:
  Tally(int id, std::string name) {
    r_.id = id;
    r_.name = std::move(name);
  }
  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (ok) return;
    ++r_.failures;
    if (r_.samples.size() < kSamples) r_.samples.push_back(what);
  }
  /// Runs `body`; a library exception counts as one failed check.
  template <typename Body>
  void guarded(const std::string& what, Body&& body) {
    try {
      body();
    } catch (const Error& e) {
      check(false, what + ": " + e.what());
    }
  }
  CriterionResult done() { return std::move(r_); }

 private:
  CriterionResult r_;
};

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  int between(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 rng_;
};

const char* const kLabels[] = {"p", "q", "r", "s", "u", "v", "w", "x", "y", "z", "a", "b"};

Divisor from_parts(const std::vector<int>& parts) {
  Divisor d;
  for (std::size_t i = 0; i < parts.size(); ++i) d.set(Point(kLabels[i]), parts[i]);
  return d;
}

/// Effective divisors on the labels p, q, r with degree in [1, max_degree].
std::vector<Divisor> small_divisors(int max_degree) {
  std::vector<Divisor> out;
  for (int a = 0; a <= max_degree; ++a)
    for (int b = 0; a + b <= max_degree; ++b)
      for (int c = 0; a + b + c <= max_degree; ++c) {
        if (a + b + c == 0) continue;
        Divisor d;
        d.set(Point("p"), a);
        d.set(Point("q"), b);
        d.set(Point("r"), c);
        out.push_back(d);
      }
  return out;
}

Divisor random_below(const Divisor& bound, Draw& draw) {
  Divisor d;
  for (const auto& [p, m] : bound.terms()) d.set(p, draw.between(0, m));
  return d;
}

std::string ctx_name(int g, int d, const Divisor& dp) {
  return "g=" + std::to_string(g) + " d=" + std::to_string(d) + " D'=" + dp.to_string();
}

template <typename Fn>
void for_each_partition_cell(Fn&& fn) {
  for (int g = 2; g <= 5; ++g)
    for (int dl = 1; dl <= 6; ++dl)
      for (const auto& parts : partitions(2 * dl)) fn(g, dl, parts);
}

}  // namespace

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(left, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, left - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

CriterionResult check_irreducible_dimension(const SweepOptions&) {
  Tally t(1, "irreducible-branch dimension identity");
  for_each_partition_cell([&](int g, int dl, const std::vector<int>& parts) {
    const BaseData base{g, dl, 0};
    const SectionData sec{from_parts(parts), false};
    const std::string what = "g=" + std::to_string(g) + " D_s=" + sec.D_s.to_string();
    t.guarded(what, [&] {
      const auto r = fibre_report(base, sec);
      t.check(r.prym_dim + r.torus_rank + r.affine_dim == dl + g - 1 && r.fibre_dim == dl + g - 1 && r.connected,
              what);
    });
  });
  return t.done();
}

CriterionResult check_genus_bookkeeping(const SweepOptions&) {
  Tally t(2, "genus bookkeeping");
  for_each_partition_cell([&](int g, int dl, const std::vector<int>& parts) {
    const BaseData base{g, dl, 0};
    const SectionData sec{from_parts(parts), false};
    const std::string what = "g=" + std::to_string(g) + " D_s=" + sec.D_s.to_string();
    t.guarded(what, [&] {
      const auto profile = classify(base, sec);
      t.check(spectral_genus(base) - normalization_genus(base, profile) == d_prime_s(sec.D_s).degree(), what);
    });
  });
  return t.done();
}

CriterionResult check_reducible_strata(const SweepOptions&) {
  Tally t(3, "reducible-branch strata");
  for (int g = 2; g <= 4; ++g)
    for (int d = -3; d <= 6; ++d)
      for (const auto& dp : small_divisors(4)) {
        const std::string what = ctx_name(g, d, dp);
        t.guarded(what, [&] {
          const StrataContext ctx(g, d, dp);
          const int expected = ctx.d_L() + g - 1;
          t.check(max_stratum_dim(ctx) == expected, what + ": max dim");

          bool has_zero = false, zero_dim_ok = true;
          for (const auto& row : enumerate_strata(ctx)) {
            if (!row.stratum.D.is_zero()) continue;
            has_zero = true;
            zero_dim_ok = zero_dim_ok && row.info.dim == g;
          }
          t.check(has_zero == (d % 2 == 0) && zero_dim_ok, what + ": D = 0 stratum");

          bool involution = true;
          for (const auto& row : enumerate_full_strata(ctx)) {
            const Stratum partner{row.stratum.D, row.info.partner_m};
            involution = involution && is_valid(partner, ctx) && partner_m(partner, ctx) == row.stratum.m;
          }
          t.check(involution, what + ": partner involution");
          t.check(connectivity_graph(ctx).connected, what + ": connectivity");
        });
      }
  return t.done();
}

CriterionResult check_lattice_laws(const SweepOptions& opts) {
  Tally t(4, "lattice laws");
  Draw draw(opts.seed ^ 0x4ULL);
  for (const auto& dp : small_divisors(4)) {
    const StrataContext ctx(2, 0, dp);
    for (int i = 0; i < 200; ++i) {
      const Divisor d1 = random_below(dp, draw), d2 = random_below(dp, draw);
      const std::string what = "D'=" + dp.to_string() + " D1=" + d1.to_string() + " D2=" + d2.to_string();
      t.guarded(what, [&] {
        const bool sizes = index_set_size(index_set(d1, ctx)) == static_cast<std::size_t>(d1.degree());
        t.check(lattice_check(d1, d2, ctx) && sizes, what);
      });
    }
  }
  return t.done();
}

CriterionResult check_nonfibration(const SweepOptions&) {
  Tally t(5, "non-fibration example");
  for (int m : {2, 4, 6, 8, 10}) {
    const std::string what = "m=" + std::to_string(m);
    t.guarded(what, [&] { t.check(verify_nonfibration(m), what); });
  }
  for (int m : {4, 8}) {
    const std::string what = "case 2, m=" + std::to_string(m);
    t.guarded(what, [&] {
      const auto w = case2_witness(m);
      t.check(w.dimensions_ok && w.modules_ok && w.subspaces_equal && w.passed(), what);
    });
  }
  return t.done();
}

CriterionResult check_homomorphism(const SweepOptions& opts) {
  Tally t(6, "local-ring homomorphism");
  Draw draw(opts.seed ^ 0x6ULL);
  auto random_poly = [&] {
    BivariatePolynomial p;
    const int terms = draw.between(1, 5);
    for (int k = 0; k < terms; ++k) {
      const int i = draw.between(0, 6);
      const int j = draw.between(0, 6 - i);
      const int num = draw.between(-7, 7);
      Rational c(num, draw.between(1, 3));
      c.canonicalize();
      p.add_term(i, j, c);
    }
    return p;
  };
  for (int m = 2; m <= 9; ++m) {
    const LocalAlgebra alg(m);
    for (int i = 0; i < 100; ++i) {
      const auto g = random_poly(), h = random_poly();
      const std::string what = "m=" + std::to_string(m) + " trial " + std::to_string(i);
      t.guarded(what, [&] {
        const auto pg = phi(g, alg), ph = phi(h, alg);
        t.check(phi(g * h, alg) == multiply(pg, ph) && member(pg, alg) && member(ph, alg) &&
                    member(phi(g * h, alg), alg),
                what);
      });
    }
  }
  return t.done();
}

CriterionResult check_invertibility(const SweepOptions&) {
  Tally t(7, "parabolic invertibility at m = 2");
  const int order = 4;
  const LocalAlgebra alg(2, order);
  for (int lam : {1, 2, -3}) {
    const std::string what = "lambda=" + std::to_string(lam);
    t.guarded(what, [&] { t.check(is_free_rank1(tau_local(build_U_lambda(Rational(lam)), order), alg), what); });
  }
  for (const Slope& lam : {Slope(Rational(0)), Slope()}) {
    const std::string what = lam ? "lambda=0" : "lambda=inf";
    t.guarded(what, [&] {
      const auto s = tau_local(build_U_lambda(lam), order);
      t.check(min_generators(s, alg) == 2 && !is_free_rank1(s, alg), what);
    });
  }
  return t.done();
}

CriterionResult check_higgs_roundtrip(const SweepOptions& opts) {
  Tally t(8, "Higgs-chart round trip");
  RoundtripOptions ro;
  ro.seed = opts.seed ^ 0x8ULL;
  ro.trials = 500;
  ro.max_multiplicity = 5;
  const auto s = roundtrip_fuzz(ro);
  for (int i = 0; i < s.trials; ++i) t.check(true, "");
  for (const auto& f : s.failures) t.check(false, f);
  if (s.trials != 500 || !s.all_passed()) t.check(false, "summary counters below the trial count");
  return t.done();
}

CriterionResult check_embedding(const SweepOptions& opts) {
  Tally t(9, "embedding consistency");
  Draw draw(opts.seed ^ 0x9ULL);
  const auto pool = small_divisors(4);
  for (int i = 0; i < 50; ++i) {
    const Divisor dp = pool[static_cast<std::size_t>(draw.between(0, static_cast<int>(pool.size()) - 1))];
    Divisor extra;
    while (extra.is_zero()) {
      for (const char* label : {"p", "q", "r", "s"}) extra.set(Point(label), draw.between(0, 2));
    }
    const Divisor dt = dp + extra;
    const int g = draw.between(2, 4), d = draw.between(-3, 6);
    const std::string what = ctx_name(g, d, dp) + " D~=" + dt.to_string();
    t.guarded(what, [&] {
      const StrataContext small(g, d, dp), large(g, d, dt);
      for (const auto& row : enumerate_full_strata(small)) {
        const auto img = embed_into_larger(row.stratum, small, dt);
        const int shift = stratum_dim(img, large) - row.info.dim;
        // D = 0 carries no scalar quotient, so its image gains one dimension less.
        const int expected = extra.degree() - (row.stratum.D.is_zero() ? 1 : 0);
        bool windows = true;
        const auto before = index_set(row.stratum.D, small), after = index_set(img.D, large);
        for (const auto& [p, slots] : before) {
          for (int k : slots) windows = windows && after.at(p).count(k) == 1;
          windows = windows && after.at(p).size() == slots.size() + static_cast<std::size_t>(extra(p));
        }
        t.check(img.m == row.stratum.m && is_valid(img, large) && shift == expected && windows,
                what + " stratum (" + row.stratum.D.to_string() + ", " + std::to_string(row.stratum.m) + ")");
      }
      bool refused = false;
      try {
        embed_into_larger(Stratum{Divisor(), 0}, small, dp);
      } catch (const Error& e) {
        refused = e.code() == ErrorCode::NotLarger;
      }
      t.check(refused, what + ": NotLarger for D~ = D'");
    });
  }
  return t.done();
}

std::vector<CriterionResult> run_sweep(const SweepOptions& opts) {
  return {check_irreducible_dimension(opts), check_genus_bookkeeping(opts), check_reducible_strata(opts),
          check_lattice_laws(opts),          check_nonfibration(opts),      check_homomorphism(opts),
          check_invertibility(opts),         check_higgs_roundtrip(opts),   check_embedding(opts)};
}

nlohmann::ordered_json to_json(const std::vector<CriterionResult>& results) {
  nlohmann::ordered_json out;
  auto rows = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::ordered_json row;
    row["id"] = r.id;
    row["name"] = r.name;
    row["status"] = r.passed() ? "PASS" : "FAIL";
    row["checks"] = r.checks;
    row["failures"] = r.failures;
    row["samples"] = r.samples;
    rows.push_back(std::move(row));
    all = all && r.passed();
  }
  out["criteria"] = std::move(rows);
  out["all_passed"] = all;
  return out;
}

}  // namespace hf
