#include "hitchin/spectral.hpp"

#include "hitchin/errors.hpp"
#include "hitchin/parmod.hpp"

#include <nlohmann/json.hpp>

namespace hf {

void BaseData::validate() const {
  if (g < 2) throw ValidationError("/g", "genus must be >= 2");
  if (d_L < 1) throw ValidationError("/d_L", "deg L must be >= 1");
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Smooth: return "Smooth";
    case Branch::IrreducibleSingular: return "IrreducibleSingular";
    case Branch::Reducible: return "Reducible";
  }
  return "Unknown";
}

SingularityProfile classify(const BaseData& base, const SectionData& sec) {
  if (!sec.D_s.is_effective()) throw Error(ErrorCode::InvalidArgument, "D_s must be effective");
  if (sec.D_s.degree() != 2 * base.d_L) {
    throw Error(ErrorCode::DegreeMismatch, "deg D_s = " + std::to_string(sec.D_s.degree()) +
                                               " but 2 d_L = " + std::to_string(2 * base.d_L));
  }
  SingularityProfile profile;
  for (const auto& [p, m] : sec.D_s.terms()) {
    if (m % 2 != 0) ++profile.r2;
    if (m < 2) continue;
    const auto kind = kind_of(m);
    if (kind == SingularityKind::Node) ++profile.r1;
    profile.entries.push_back({p, m, kind});
  }
  if (profile.r2 % 2 != 0) throw Error(ErrorCode::OddCuspCount, "odd number of odd-multiplicity points");
  return profile;
}

Branch branch_of(const SectionData& sec) {
  bool all_simple = true;
  for (const auto& [p, m] : sec.D_s.terms())
    if (m != 1) all_simple = false;
  if (all_simple && !sec.D_s.is_zero()) return Branch::Smooth;
  if (sec.L_is_square_root_of_D_half && try_half(sec.D_s)) return Branch::Reducible;
  return Branch::IrreducibleSingular;
}

int spectral_genus(const BaseData& base) { return 2 * base.g - 1 + base.d_L; }

int normalization_genus(const BaseData& base, const SingularityProfile& profile) {
  return 2 * base.g - 1 + profile.r2 / 2;
}

KernelShape jacobian_kernel_shape(const SingularityProfile& profile) {
  KernelShape shape;
  for (const auto& e : profile.entries) {
    if (e.kind == SingularityKind::Node) {
      ++shape.torus_rank;
      shape.affine_dim += (e.m - 2) / 2;
    } else {
      shape.affine_dim += (e.m - 1) / 2;
    }
  }
  return shape;
}

PrymData prym_data(const BaseData& base, const SingularityProfile& profile) {
  return {base.g - 1 + profile.r2 / 2, profile.r2 > 0 ? 1 : 2};
}

int twisted_degree(const BaseData& base, const Divisor& ds) { return base.d_L - d_prime_s(ds).degree(); }

FibreReport fibre_report(const BaseData& base, const SectionData& sec) {
  base.validate();
  if (sec.L_is_square_root_of_D_half && !try_half(sec.D_s)) {
    throw ValidationError("/reducible", "flag set but D_s is not twice a divisor");
  }
  FibreReport r;
  r.base = base;
  r.section = sec;
  const auto profile = classify(base, sec);
  r.branch = branch_of(sec);
  r.spectral_genus = spectral_genus(base);
  r.normalization_genus = normalization_genus(base, profile);
  const auto kernel = jacobian_kernel_shape(profile);
  r.torus_rank = kernel.torus_rank;
  r.affine_dim = kernel.affine_dim;
  const auto prym = prym_data(base, profile);
  r.prym_dim = prym.prym_dim;
  r.prym_components = prym.components;

  const int expected = base.d_L + base.g - 1;
  if (r.branch == Branch::Reducible) {
    StrataContext ctx(base.g, base.d, half(sec.D_s));
    r.fibre_dim = max_stratum_dim(ctx);
    const auto graph = connectivity_graph(ctx);
    r.connected = graph.connected;
    r.connectedness_evidence = "strata graph over m in [" + std::to_string(graph.nodes.front()) + ", " +
                               std::to_string(graph.nodes.back()) + "] is connected";
    r.strata_context = std::move(ctx);
  } else {
    r.fibre_dim = r.prym_dim + r.torus_rank + r.affine_dim;
    if (r.prym_components == 1) {
      r.connected = true;
      r.connectedness_evidence = "ramified normalization cover: Prym connected";
    } else {
      // Unramified: every point is a node. The local witness at one node joins the two
      // Prym components when its twist is odd.
      const auto& node = profile.entries.front();
      const auto w = connecting_witness(node.m);
      r.connected = w.passed() && w.twist_flips_parity;
      r.connectedness_evidence = std::string(node.m % 4 == 0 ? "Case 2" : "Case 1") + " witness at " +
                                 node.point.label() + " (A_" + std::to_string(node.m - 1) +
                                 "), twist " + std::to_string(w.twist);
    }
  }
  if (r.fibre_dim != expected) {
    throw Error(ErrorCode::InvariantFailure, "fibre dimension " + std::to_string(r.fibre_dim) +
                                                 " != d_L + g - 1 = " + std::to_string(expected));
  }
  if (!r.connected) throw Error(ErrorCode::InvariantFailure, "fibre connectedness could not be certified");
  return r;
}

nlohmann::ordered_json to_json(const FibreReport& r, const ReportOptions& opts) {
  using json = nlohmann::ordered_json;
  json out;
  json input;
  input["g"] = r.base.g;
  input["d_L"] = r.base.d_L;
  input["d"] = r.base.d;
  json ds;
  to_json(ds, r.section.D_s);
  input["D_s"] = ds;
  input["reducible"] = r.section.L_is_square_root_of_D_half;
  out["input"] = std::move(input);
  out["branch"] = std::string(to_string(r.branch));
  out["spectral_genus"] = r.spectral_genus;
  out["normalization_genus"] = r.normalization_genus;
  out["torus_rank"] = r.torus_rank;
  out["affine_dim"] = r.affine_dim;
  out["prym_dim"] = r.prym_dim;
  out["prym_components"] = r.prym_components;
  out["fibre_dim"] = r.fibre_dim;
  out["connected"] = r.connected;
  out["connectedness_evidence"] = r.connectedness_evidence;
  if (r.strata_context && (opts.emit_strata || opts.emit_graph)) {
    json table = strata_report(*r.strata_context);
    if (opts.emit_strata) out["strata"] = table["strata"];
    if (opts.emit_graph) out["graph"] = table["graph"];
  }
  return out;
}

}  // namespace hf
