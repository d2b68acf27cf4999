#pragma once

// Parabolic modules at a single A_{m-1} singularity, at the jet level.
//
// For a node the parabolic space (F_{p1} (+) F_{p2})^{m/2} is identified with
// pairs of (m/2)-jets: copy k (1-based) holds the coefficient of t^{k-1} on
// each branch, so v^k_{2k-1} lives on branch 1 and v^k_{2k} on branch 2. The
// local ring acts by truncated multiplication through phi_even. For a cusp the
// space F^{m-1} is the (m-1)-jets on the single branch.
//
// tau_local(U) is the space of local sections (s1, s2), as N-jets, whose
// leading jet lies in U; twisting by O(k p1 - k p2) multiplies branch 1 by
// t^{-k} and branch 2 by t^{k}.

#include "hitchin/localring.hpp"

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace hf {

class ParabolicSubspace {
 public:
  /// Validates the dimension (m/2 or (m-1)/2) and the module condition.
  ParabolicSubspace(int m, JetSubspace space);

  int m() const { return m_; }
  SingularityKind kind() const { return kind_of(m_); }
  const JetSubspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  /// Jet length of the parabolic space: m/2 for a node, m-1 for a cusp.
  static int jet_length(int m);
  /// Required dimension: m/2 for a node, (m-1)/2 for a cusp.
  static int required_dim(int m);

 private:
  int m_;
  JetSubspace space_;
};

/// Projective parameter of a one-dimensional U at an ordinary node; nullopt is infinity.
using Slope = std::optional<Rational>;

/// m = 2: span of (1, lambda), or (0, 1) at infinity.
ParabolicSubspace build_U_lambda(const Slope& lambda);
/// Branch-2 components vanish; quotient is F_{p2}^{m/2}.
ParabolicSubspace build_U0(int m);
/// Branch-1 components vanish; quotient is F_{p1}^{m/2}.
ParabolicSubspace build_Uinf(int m);
/// m = 0 mod 4: v^1_1 = 0 and v^{i/2}_i = 0 for even 2 <= i <= m-2.
ParabolicSubspace build_U_case2(int m);
/// Cusp (m odd): the jets of the local ring itself, span{1, t^2, ..., t^{m-3}}.
ParabolicSubspace build_cusp_standard(int m);

/// Local sections of tau(O, U) as N-jets (N = 0 selects N = m). Requires N >= m.
JetSubspace tau_local(const ParabolicSubspace& u, int order = 0);
/// Local sections of tau(O(k p1 - k p2), U) in the twisted frame, on the window N - |k|.
JetSubspace tau_local(const ParabolicSubspace& u, int order, int twist);

/// Tensoring by O(k p1 - k p2): branch 1 times t^{-k}, branch 2 times t^{k}, on the
/// surviving window of length N - |k|. Throws ShiftOutOfWindow if a pole would appear
/// or the window is empty.
JetSubspace twist_by_E(const JetSubspace& s, int k);

/// Sections of a pair of N-jets with the first `count` coefficients of `branch` zero.
JetSubspace vanishing_on_branch(int branch, int count, int order);

struct NonFibrationWitness {
  int m = 0;
  int twist = 0;                 ///< k in E = k p1 - k p2
  JetSubspace source;            ///< tau(O, U_0)
  JetSubspace target;            ///< tau(O(E), U'), in the twisted frame
  bool subspaces_equal = false;
  bool modules_ok = false;
  bool dimensions_ok = false;
  bool first_projections_differ = false;  ///< O vs O(E) with E != 0
  bool twist_flips_parity = false;        ///< k odd: F(k(q - sigma q)) changes Prym component

  bool passed() const { return subspaces_equal && modules_ok && dimensions_ok && first_projections_differ; }
};

/// tau(O, U_0) = tau(O(E), U_inf) for E = (m/2)(p1 - p2), while pr_1 differs.
NonFibrationWitness nonfibration_witness(int m, int order = 0);
bool verify_nonfibration(int m, int order = 0);

/// Same intersection for the Case 2 subspace with E = p1 - p2 (m = 0 mod 4).
NonFibrationWitness case2_witness(int m, int order = 0);
bool verify_case2(int m, int order = 0);

/// Witness joining the two components of the compactified Prym at a node of type
/// A_{m-1}: Case 1 when m = 2 mod 4, Case 2 when m = 0 mod 4.
NonFibrationWitness connecting_witness(int m);

/// {"branches", "order", "basis"}: reduced row-echelon basis rows, each the branch-1
/// coefficients followed by branch 2, as "num/den" strings.
nlohmann::ordered_json to_json(const JetSubspace& s);
nlohmann::ordered_json to_json(const NonFibrationWitness& w);

}  // namespace hf
