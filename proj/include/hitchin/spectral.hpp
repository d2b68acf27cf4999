#pragma once

// Spectral-curve bookkeeping for rank-2 L-twisted Higgs pairs with fixed
// determinant: singularity profile of X_s from div(s), genera, the kernel of
// Jac(X_s) -> Jac(normalization), Prym data, and the assembled fibre report.

#include "hitchin/divisor.hpp"
#include "hitchin/localring.hpp"
#include "hitchin/redfibre.hpp"

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace hf {

struct BaseData {
  int g = 2;    ///< genus of X, >= 2
  int d_L = 1;  ///< deg L, >= 1
  int d = 0;    ///< deg Lambda, any integer

  /// Throws ValidationError on g < 2 or d_L < 1.
  void validate() const;
};

struct SectionData {
  Divisor D_s;
  /// Stands in for the 2-torsion condition L = O(D_s/2): meaningful only when D_s is even.
  bool L_is_square_root_of_D_half = false;
};

struct SingularPoint {
  Point point;
  int m = 0;
  SingularityKind kind = SingularityKind::Node;
};

struct SingularityProfile {
  std::vector<SingularPoint> entries;  ///< points of multiplicity >= 2
  int r1 = 0;  ///< nodes (even multiplicity)
  /// Odd-multiplicity points of D_s, simple zeros included: the branch points of the
  /// normalized double cover. Always even.
  int r2 = 0;
};

enum class Branch { Smooth, IrreducibleSingular, Reducible };
std::string_view to_string(Branch b);

/// Throws DegreeMismatch if deg D_s != 2 d_L, OddCuspCount if the odd count is odd.
SingularityProfile classify(const BaseData& base, const SectionData& sec);
Branch branch_of(const SectionData& sec);

/// Arithmetic genus 2g - 1 + d_L.
int spectral_genus(const BaseData& base);
/// 2g - 1 + r2/2.
int normalization_genus(const BaseData& base, const SingularityProfile& profile);

struct KernelShape {
  int torus_rank = 0;  ///< (C*)^{r1}
  int affine_dim = 0;  ///< sum (m_i - 2)/2 + sum (m'_j - 1)/2
};
KernelShape jacobian_kernel_shape(const SingularityProfile& profile);

struct PrymData {
  int prym_dim = 0;    ///< g - 1 + r2/2
  int components = 1;  ///< 1 for a ramified cover, 2 for an unramified one
};
PrymData prym_data(const BaseData& base, const SingularityProfile& profile);

/// d_L - deg D'_s, the degree of L~ = L(-D'_s).
int twisted_degree(const BaseData& base, const Divisor& ds);

struct FibreReport {
  BaseData base;
  SectionData section;
  Branch branch = Branch::Smooth;
  int spectral_genus = 0;
  int normalization_genus = 0;
  int torus_rank = 0;
  int affine_dim = 0;
  int prym_dim = 0;
  int prym_components = 1;
  int fibre_dim = 0;
  bool connected = false;
  /// How connectedness was certified.
  std::string connectedness_evidence;
  /// Present for the reducible branch.
  std::optional<StrataContext> strata_context;
};

/// Assembles everything and checks fibre_dim = d_L + g - 1; throws InvariantFailure otherwise.
FibreReport fibre_report(const BaseData& base, const SectionData& sec);

struct ReportOptions {
  bool emit_strata = true;
  bool emit_graph = true;
};

nlohmann::ordered_json to_json(const FibreReport& report, const ReportOptions& opts = {});

}  // namespace hf
