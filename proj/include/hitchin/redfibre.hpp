#pragma once

// The fibre over a section s = s'^2 (reducible spectral curve), described by the
// strata F(D, m) -> Jac^m(X) for effective D <= D' = div(s') and an eigenbundle
// degree m. Everything here is combinatorial: Jac^m(X) contributes dimension g.

#include "hitchin/divisor.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace hf {

struct StrataContext {
  int g = 2;
  int d = 0;  ///< degree of the fixed determinant Lambda
  Divisor d_prime;

  StrataContext(int g, int d, Divisor d_prime);
  int d_L() const { return d_prime.degree(); }
};

struct Stratum {
  Divisor D;
  int m = 0;
  friend bool operator==(const Stratum&, const Stratum&) = default;
};

enum class Injectivity { Iso, TwoToOne };
std::string_view to_string(Injectivity inj);

struct StratumInfo {
  int dim = 0;
  int partner_m = 0;
  Injectivity injectivity = Injectivity::Iso;
  std::string ramification_condition;  ///< "M^2 = Lambda(-D)"
};

struct StratumRow {
  Stratum stratum;
  StratumInfo info;
};

/// Coefficient slots of E(D, M): at each p in Supp(D'), exponents D'(p)-D(p) .. D'(p)-1.
using IndexSet = std::map<Point, std::set<int>>;

/// d/2 - deg D <= m <= d/2, with 0 <= D <= D'.
bool is_valid(const Stratum& s, const StrataContext& ctx);
/// Reduced range (d - deg D)/2 <= m <= d/2: one representative per partner orbit.
bool is_reduced(const Stratum& s, const StrataContext& ctx);

IndexSet index_set(const Divisor& D, const StrataContext& ctx);
std::size_t index_set_size(const IndexSet& idx);

/// index_set(min) is the pointwise intersection and index_set(max) the union.
bool lattice_check(const Divisor& d1, const Divisor& d2, const StrataContext& ctx);

/// g for D = 0, deg D + g - 1 otherwise.
int stratum_dim(const Stratum& s, const StrataContext& ctx);
int partner_m(const Stratum& s, const StrataContext& ctx);
Injectivity injectivity_kind(const Stratum& s, const StrataContext& ctx);
std::string ramification_condition(const Divisor& D);
StratumInfo stratum_info(const Stratum& s, const StrataContext& ctx);

/// Every D <= D' with every m in the reduced range; sorted by D (degree, then labels),
/// then m descending.
std::vector<StratumRow> enumerate_strata(const StrataContext& ctx);
/// Same, over the full range of m.
std::vector<StratumRow> enumerate_full_strata(const StrataContext& ctx);
int max_stratum_dim(const StrataContext& ctx);

struct GraphEdge {
  int from = 0;
  int to = 0;
  Divisor witness;  ///< a divisor of degree d_m below D' realising the edge
};

struct ConnectivityGraph {
  std::vector<int> nodes;  ///< admissible m, ascending
  std::vector<GraphEdge> edges;
  bool connected = false;
};

/// ceil(d/2 - m)
int d_m(int d, int m);

/// Nodes m in [ceil(d/2 - d_L), floor(d/2)], one edge m -- floor(d/2) per node realised by a
/// divisor of degree d_m (the partner of (D, m) is floor(d/2)); connectivity by search.
ConnectivityGraph connectivity_graph(const StrataContext& ctx);

/// (D, m) -> (D~ - D' + D, m) in the context with D' replaced by D~ > D'.
/// Throws NotLarger unless D~ >= D' pointwise and D~ != D'.
Stratum embed_into_larger(const Stratum& s, const StrataContext& ctx, const Divisor& d_tilde);

/// JSON table for the `strata` subcommand.
nlohmann::ordered_json strata_report(const StrataContext& ctx);

}  // namespace hf
