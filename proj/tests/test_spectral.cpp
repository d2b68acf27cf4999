#include "hitchin/errors.hpp"
#include "hitchin/spectral.hpp"
#include "hitchin/sweep.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace hf {
namespace {

Divisor D(const std::string& s) { return Divisor::parse(s); }

TEST(ClassifyTest, Examples) {
  auto p = classify({2, 2, 0}, {D("4p"), false});
  ASSERT_EQ(p.entries.size(), 1u);
  EXPECT_EQ(p.entries[0].m, 4);
  EXPECT_EQ(p.entries[0].kind, SingularityKind::Node);
  EXPECT_EQ(p.r1, 1);
  EXPECT_EQ(p.r2, 0);

  p = classify({2, 2, 0}, {D("p+q+r+s"), false});
  EXPECT_TRUE(p.entries.empty());
  EXPECT_EQ(p.r1, 0);

  p = classify({2, 3, 0}, {D("3p+3q"), false});
  ASSERT_EQ(p.entries.size(), 2u);
  EXPECT_EQ(p.entries[0].kind, SingularityKind::Cusp);
  EXPECT_EQ(p.entries[1].kind, SingularityKind::Cusp);
  EXPECT_EQ(p.r2, 2);
}

TEST(ClassifyTest, Errors) {
  try {
    classify({2, 2, 0}, {D("3p"), false});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
  }
  // Degrees sum to 2 d_L, so the odd points always pair up.
  EXPECT_EQ(classify({2, 2, 0}, {D("3p+q"), false}).r2, 2);
  EXPECT_EQ(classify({2, 2, 0}, {D("2p+q+r"), false}).r2, 2);
}

TEST(BranchTest, Examples) {
  EXPECT_EQ(branch_of({D("2p+2q"), true}), Branch::Reducible);
  EXPECT_EQ(branch_of({D("2p+2q"), false}), Branch::IrreducibleSingular);
  EXPECT_EQ(branch_of({D("p+q+r+s"), true}), Branch::Smooth);
  EXPECT_EQ(branch_of({D("p+q+r+s"), false}), Branch::Smooth);
}

TEST(GenusTest, Examples) {
  EXPECT_EQ(spectral_genus({2, 3, 0}), 6);
  EXPECT_EQ(spectral_genus({2, 1, 0}), 4);
  EXPECT_EQ(spectral_genus({3, 2, 0}), 7);

  SingularityProfile prof;
  prof.r2 = 2;
  EXPECT_EQ(normalization_genus({2, 1, 0}, prof), 4);
  prof.r2 = 0;
  EXPECT_EQ(normalization_genus({2, 1, 0}, prof), 3);
  prof.r2 = 4;
  EXPECT_EQ(normalization_genus({4, 1, 0}, prof), 9);
}

TEST(KernelTest, Examples) {
  SingularityProfile p;
  p.entries = {{Point("p"), 4, SingularityKind::Node}};
  EXPECT_EQ(jacobian_kernel_shape(p).torus_rank, 1);
  EXPECT_EQ(jacobian_kernel_shape(p).affine_dim, 1);
  p.entries = {{Point("p"), 2, SingularityKind::Node}};
  EXPECT_EQ(jacobian_kernel_shape(p).torus_rank, 1);
  EXPECT_EQ(jacobian_kernel_shape(p).affine_dim, 0);
  p.entries = {{Point("p"), 3, SingularityKind::Cusp}, {Point("q"), 5, SingularityKind::Cusp}};
  EXPECT_EQ(jacobian_kernel_shape(p).torus_rank, 0);
  EXPECT_EQ(jacobian_kernel_shape(p).affine_dim, 3);
}

TEST(PrymTest, Examples) {
  SingularityProfile p;
  p.r2 = 2;
  EXPECT_EQ(prym_data({2, 1, 0}, p).prym_dim, 2);
  EXPECT_EQ(prym_data({2, 1, 0}, p).components, 1);
  p.r2 = 0;
  EXPECT_EQ(prym_data({2, 1, 0}, p).prym_dim, 1);
  EXPECT_EQ(prym_data({2, 1, 0}, p).components, 2);
  p.r2 = 4;
  EXPECT_EQ(prym_data({3, 1, 0}, p).prym_dim, 4);
}

TEST(TwistedDegreeTest, Examples) {
  EXPECT_EQ(twisted_degree({2, 2, 0}, D("4p")), 0);
  EXPECT_EQ(twisted_degree({2, 3, 0}, D("3p+3q")), 1);
  EXPECT_EQ(twisted_degree({2, 2, 0}, D("p+q+r+s")), 2);
}

TEST(FibreReportTest, Examples) {
  auto r = fibre_report({2, 2, 0}, {D("4p"), false});
  EXPECT_EQ(r.branch, Branch::IrreducibleSingular);
  EXPECT_EQ(r.fibre_dim, 3);
  EXPECT_EQ(r.prym_dim, 1);
  EXPECT_EQ(r.torus_rank, 1);
  EXPECT_EQ(r.affine_dim, 1);
  EXPECT_EQ(r.prym_components, 2);
  EXPECT_TRUE(r.connected);

  r = fibre_report({2, 2, 0}, {D("p+q+r+s"), false});
  EXPECT_EQ(r.branch, Branch::Smooth);
  EXPECT_EQ(r.fibre_dim, 3);

  r = fibre_report({2, 2, 2}, {D("2p+2q"), true});
  EXPECT_EQ(r.branch, Branch::Reducible);
  EXPECT_EQ(r.fibre_dim, 3);
  ASSERT_TRUE(r.strata_context.has_value());
  EXPECT_EQ(r.strata_context->d_prime, D("p+q"));
}

TEST(FibreReportTest, Validation) {
  try {
    fibre_report({1, 2, 0}, {D("4p"), false});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.path(), "/g");
  }
  try {
    fibre_report({2, 2, 0}, {D("3p+q"), true});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.path(), "/reducible");
  }
  EXPECT_THROW(fibre_report({2, 2, 0}, {D("5p-q"), false}), Error);
}

TEST(FibreReportTest, JsonFieldOrder) {
  const auto j = to_json(fibre_report({2, 2, 2}, {D("2p+2q"), true}));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"input", "branch", "spectral_genus", "normalization_genus", "torus_rank",
                                            "affine_dim", "prym_dim", "prym_components", "fibre_dim", "connected",
                                            "connectedness_evidence", "strata", "graph"}));
  EXPECT_EQ(j["input"]["D_s"].dump(), R"({"points":[{"label":"p","mult":2},{"label":"q","mult":2}]})");
  ReportOptions off{false, false};
  EXPECT_FALSE(to_json(fibre_report({2, 2, 2}, {D("2p+2q"), true}), off).contains("strata"));
}

// Independent oracle: the fibre is a torsor over Prym(X_s -> X), whose dimension is the
// arithmetic genus of X_s minus g. Compared with the library's sum over profile pieces.
TEST(SpectralOracle, DimensionFromArithmeticGenus) {
  for (int g = 2; g <= 5; ++g)
    for (int dl = 1; dl <= 6; ++dl)
      for (const auto& parts : partitions(2 * dl)) {
        Divisor ds;
        for (std::size_t i = 0; i < parts.size(); ++i) ds.set(Point("x" + std::to_string(i)), parts[i]);
        const auto r = fibre_report({g, dl, 0}, {ds, false});
        EXPECT_EQ(r.fibre_dim, (2 * g - 1 + dl) - g);
        // and the genus drop is the delta invariant sum of floor(m/2)
        int delta = 0;
        for (int m : parts) delta += m / 2;
        EXPECT_EQ(r.spectral_genus - r.normalization_genus, delta);
        EXPECT_EQ(twisted_degree({g, dl, 0}, ds), dl - delta);
      }
}

TEST(SpectralOracle, PartitionCounts) {
  // p(2), p(4), ..., p(12)
  const int expected[] = {2, 5, 11, 22, 42, 77};
  for (int dl = 1; dl <= 6; ++dl) EXPECT_EQ(static_cast<int>(partitions(2 * dl).size()), expected[dl - 1]);
}

TEST(SpectralProperty, ReducibleDimensionMatchesIrreducible) {
  for (int g = 2; g <= 4; ++g)
    for (int d = -3; d <= 6; ++d)
      for (const char* ds : {"2p", "2p+2q", "4p+2q", "6p"}) {
        const Divisor div = D(ds);
        const int dl = div.degree() / 2;
        const auto red = fibre_report({g, dl, d}, {div, true});
        const auto irr = fibre_report({g, dl, d}, {div, false});
        EXPECT_EQ(red.fibre_dim, irr.fibre_dim);
        EXPECT_TRUE(red.connected && irr.connected);
      }
}

}  // namespace
}  // namespace hf
