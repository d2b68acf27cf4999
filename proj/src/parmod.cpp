#include "hitchin/parmod.hpp"

#include "hitchin/errors.hpp"

#include <cstdlib>

#include <nlohmann/json.hpp>

namespace hf {

namespace {

JetElement node_vector(const std::vector<Rational>& b1, const std::vector<Rational>& b2) {
  const int n = static_cast<int>(b1.size());
  return JetElement::node(Jet<Rational>(n, b1), Jet<Rational>(n, b2));
}

/// Basis vector with a 1 in coefficient `k` of `branch` (0 or 1), order n.
JetElement unit(int branch, int k, int n, int branches = 2) {
  JetElement e;
  for (int b = 0; b < branches; ++b) e.branches.emplace_back(n);
  e.branches[branch][k] = 1;
  return e;
}

void require_even(int m, const char* what) {
  if (m < 2 || m % 2 != 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs even m >= 2");
}

}  // namespace

int ParabolicSubspace::jet_length(int m) { return m % 2 == 0 ? m / 2 : m - 1; }
int ParabolicSubspace::required_dim(int m) { return m % 2 == 0 ? m / 2 : (m - 1) / 2; }

ParabolicSubspace::ParabolicSubspace(int m, JetSubspace space) : m_(m), space_(std::move(space)) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "A_{m-1} needs m >= 2");
  const int branches = kind() == SingularityKind::Node ? 2 : 1;
  if (space_.branches != branches || space_.order != jet_length(m)) {
    throw Error(ErrorCode::InvalidArgument, "parabolic subspace has the wrong ambient shape");
  }
  if (static_cast<int>(space_.dim()) != required_dim(m)) {
    throw Error(ErrorCode::InvalidArgument, "parabolic subspace must have dimension " +
                                                std::to_string(required_dim(m)) + ", got " +
                                                std::to_string(space_.dim()));
  }
  if (!is_module(space_, LocalAlgebra(m, jet_length(m)))) {
    throw Error(ErrorCode::InvalidArgument, "parabolic subspace is not a module over the local ring");
  }
}

ParabolicSubspace build_U_lambda(const Slope& lambda) {
  JetElement gen = lambda ? node_vector({Rational(1)}, {*lambda}) : node_vector({Rational(0)}, {Rational(1)});
  return ParabolicSubspace(2, JetSubspace::span(2, 1, {gen}));
}

ParabolicSubspace build_U0(int m) {
  require_even(m, "U_0");
  const int n = m / 2;
  std::vector<JetElement> gens;
  for (int k = 0; k < n; ++k) gens.push_back(unit(0, k, n));
  return ParabolicSubspace(m, JetSubspace::span(2, n, gens));
}

ParabolicSubspace build_Uinf(int m) {
  require_even(m, "U_inf");
  const int n = m / 2;
  std::vector<JetElement> gens;
  for (int k = 0; k < n; ++k) gens.push_back(unit(1, k, n));
  return ParabolicSubspace(m, JetSubspace::span(2, n, gens));
}

ParabolicSubspace build_U_case2(int m) {
  if (m < 4 || m % 4 != 0) throw Error(ErrorCode::InvalidArgument, "Case 2 needs m = 0 mod 4");
  const int n = m / 2;
  // Coordinates v^k_{2k-1} (branch 1, coeff k-1) and v^k_{2k} (branch 2, coeff k-1).
  // v^1_1 = 0 kills branch-1 coeff 0; v^{i/2}_i = 0 for even i <= m-2 kills branch-2 coeffs 0..n-2.
  std::vector<JetElement> gens;
  for (int k = 1; k < n; ++k) gens.push_back(unit(0, k, n));
  gens.push_back(unit(1, n - 1, n));
  return ParabolicSubspace(m, JetSubspace::span(2, n, gens));
}

ParabolicSubspace build_cusp_standard(int m) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::InvalidArgument, "cusp needs odd m >= 3");
  const int n = m - 1;
  std::vector<JetElement> gens;
  for (int k = 0; k < n; k += 2) gens.push_back(unit(0, k, n, 1));
  return ParabolicSubspace(m, JetSubspace::span(1, n, gens));
}

JetSubspace tau_local(const ParabolicSubspace& u, int order) {
  const int n = order == 0 ? u.m() : order;
  if (n < u.m()) throw Error(ErrorCode::TruncationTooShort, "tau_local needs N >= m");
  const int len = ParabolicSubspace::jet_length(u.m());
  const int branches = u.space().branches;
  std::vector<JetElement> gens;
  for (const auto& v : u.space().basis()) {
    JetElement lifted;
    for (const auto& b : v.branches) {
      Jet<Rational> j(n);
      for (int k = 0; k < len; ++k) j[k] = b[k];
      lifted.branches.push_back(std::move(j));
    }
    gens.push_back(std::move(lifted));
  }
  for (int b = 0; b < branches; ++b)
    for (int k = len; k < n; ++k) gens.push_back(unit(b, k, n, branches));
  return JetSubspace::span(branches, n, gens);
}

JetSubspace tau_local(const ParabolicSubspace& u, int order, int twist) {
  return twist_by_E(tau_local(u, order), twist);
}

JetSubspace twist_by_E(const JetSubspace& s, int k) {
  if (s.branches != 2) throw Error(ErrorCode::InvalidArgument, "twist_by_E acts on node jets");
  if (k == 0) return s;
  const int n = s.order;
  const int w = n - std::abs(k);
  if (w <= 0) throw Error(ErrorCode::ShiftOutOfWindow, "twist leaves an empty window");
  // Branch 1 is multiplied by t^{-k}, branch 2 by t^{k}; the branch shifted down must
  // not carry coefficients below |k|.
  const int down = k > 0 ? 0 : 1;
  const int shift[2] = {-k, k};
  std::vector<JetElement> images;
  for (const auto& v : s.basis()) {
    for (int c = 0; c < std::abs(k); ++c) {
      if (!is_zero(v.branches[down][c])) {
        throw Error(ErrorCode::ShiftOutOfWindow,
                    "twist by " + std::to_string(k) + " would create a pole on branch " + std::to_string(down + 1));
      }
    }
    JetElement img;
    for (int b = 0; b < 2; ++b) {
      Jet<Rational> j(w);
      for (int i = 0; i < w; ++i) {
        const int src = i - shift[b];
        if (src >= 0 && src < n) j[i] = v.branches[b][src];
      }
      img.branches.push_back(std::move(j));
    }
    images.push_back(std::move(img));
  }
  return JetSubspace::span(2, w, images);
}

JetSubspace vanishing_on_branch(int branch, int count, int order) {
  std::vector<JetElement> gens;
  for (int b = 0; b < 2; ++b)
    for (int k = (b == branch ? count : 0); k < order; ++k) gens.push_back(unit(b, k, order));
  return JetSubspace::span(2, order, gens);
}

namespace {

NonFibrationWitness make_witness(int m, int order, const ParabolicSubspace& target_u, int twist) {
  const int n = order == 0 ? m : order;
  const auto source_u = build_U0(m);
  NonFibrationWitness w;
  w.m = m;
  w.twist = twist;
  w.source = tau_local(source_u, n).truncated(n - twist);
  w.target = tau_local(target_u, n, twist);
  w.subspaces_equal = (w.source == w.target);
  const LocalAlgebra jets(m, m / 2);
  w.modules_ok = is_module(source_u.space(), jets) && is_module(target_u.space(), jets);
  w.dimensions_ok = static_cast<int>(source_u.dim()) == m / 2 && static_cast<int>(target_u.dim()) == m / 2;
  w.first_projections_differ = twist != 0;
  w.twist_flips_parity = twist % 2 != 0;
  return w;
}

}  // namespace

NonFibrationWitness nonfibration_witness(int m, int order) {
  require_even(m, "nonfibration");
  return make_witness(m, order, build_Uinf(m), m / 2);
}

bool verify_nonfibration(int m, int order) { return nonfibration_witness(m, order).passed(); }

NonFibrationWitness case2_witness(int m, int order) { return make_witness(m, order, build_U_case2(m), 1); }

bool verify_case2(int m, int order) { return case2_witness(m, order).passed(); }

NonFibrationWitness connecting_witness(int m) {
  require_even(m, "connecting witness");
  return m % 4 == 0 ? case2_witness(m) : nonfibration_witness(m);
}

nlohmann::ordered_json to_json(const JetSubspace& s) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& v : s.space.basis()) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  return {{"branches", s.branches}, {"order", s.order}, {"dim", s.dim()}, {"basis", std::move(rows)}};
}

nlohmann::ordered_json to_json(const NonFibrationWitness& w) {
  return {{"m", w.m},
          {"twist", w.twist},
          {"subspaces_equal", w.subspaces_equal},
          {"modules_ok", w.modules_ok},
          {"dimensions_ok", w.dimensions_ok},
          {"first_projections_differ", w.first_projections_differ},
          {"twist_flips_parity", w.twist_flips_parity},
          {"passed", w.passed()},
          {"source", to_json(w.source)},
          {"target", to_json(w.target)}};
}

}  // namespace hf
