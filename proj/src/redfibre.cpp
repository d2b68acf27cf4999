#include "hitchin/redfibre.hpp"

#include "hitchin/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <queue>

namespace hf {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

/// Some D <= bound of the given degree (greedy over sorted labels).
Divisor divisor_of_degree(const Divisor& bound, int degree) {
  Divisor out;
  int left = degree;
  for (const auto& [p, mult] : bound.terms()) {
    int take = std::min(mult, left);
    out.set(p, take);
    left -= take;
  }
  if (left != 0) throw Error(ErrorCode::InvariantFailure, "no divisor of degree " + std::to_string(degree) + " below D'");
  return out;
}

}  // namespace

StrataContext::StrataContext(int g_, int d_, Divisor d_prime_) : g(g_), d(d_), d_prime(std::move(d_prime_)) {
  if (g < 2) throw Error(ErrorCode::InvalidArgument, "genus must be >= 2");
  if (!d_prime.is_effective() || d_prime.degree() < 1) {
    throw Error(ErrorCode::InvalidArgument, "D' must be effective of degree >= 1");
  }
}

std::string_view to_string(Injectivity inj) { return inj == Injectivity::Iso ? "Iso" : "TwoToOne"; }

bool is_valid(const Stratum& s, const StrataContext& ctx) {
  if (!s.D.is_effective() || !leq(s.D, ctx.d_prime)) return false;
  return ctx.d - 2 * s.D.degree() <= 2 * s.m && 2 * s.m <= ctx.d;
}

bool is_reduced(const Stratum& s, const StrataContext& ctx) {
  return is_valid(s, ctx) && ctx.d - s.D.degree() <= 2 * s.m;
}

IndexSet index_set(const Divisor& D, const StrataContext& ctx) {
  if (!D.is_effective() || !leq(D, ctx.d_prime)) {
    throw Error(ErrorCode::InvalidArgument, "index_set needs 0 <= D <= D'");
  }
  IndexSet out;
  for (const auto& [p, top] : ctx.d_prime.terms()) {
    auto& slots = out[p];
    for (int k = top - D(p); k < top; ++k) slots.insert(k);
  }
  return out;
}

std::size_t index_set_size(const IndexSet& idx) {
  std::size_t n = 0;
  for (const auto& [p, s] : idx) n += s.size();
  return n;
}

bool lattice_check(const Divisor& d1, const Divisor& d2, const StrataContext& ctx) {
  const auto a = index_set(d1, ctx), b = index_set(d2, ctx);
  const auto lo = index_set(min(d1, d2), ctx), hi = index_set(max(d1, d2), ctx);
  for (const auto& [p, top] : ctx.d_prime.terms()) {
    std::set<int> inter, uni;
    std::set_intersection(a.at(p).begin(), a.at(p).end(), b.at(p).begin(), b.at(p).end(),
                          std::inserter(inter, inter.end()));
    std::set_union(a.at(p).begin(), a.at(p).end(), b.at(p).begin(), b.at(p).end(), std::inserter(uni, uni.end()));
    if (lo.at(p) != inter || hi.at(p) != uni) return false;
  }
  return true;
}

int stratum_dim(const Stratum& s, const StrataContext& ctx) {
  return s.D.is_zero() ? ctx.g : s.D.degree() + ctx.g - 1;
}

int partner_m(const Stratum& s, const StrataContext& ctx) { return ctx.d - s.D.degree() - s.m; }

Injectivity injectivity_kind(const Stratum& s, const StrataContext& ctx) {
  return 2 * s.m == ctx.d - s.D.degree() ? Injectivity::TwoToOne : Injectivity::Iso;
}

std::string ramification_condition(const Divisor& D) {
  if (D.is_zero()) return "M^2 = Lambda";
  return "M^2 = Lambda(-(" + D.to_string() + "))";
}

StratumInfo stratum_info(const Stratum& s, const StrataContext& ctx) {
  if (!is_valid(s, ctx)) {
    throw Error(ErrorCode::InvalidArgument, "invalid stratum (" + s.D.to_string() + ", " + std::to_string(s.m) + ")");
  }
  return {stratum_dim(s, ctx), partner_m(s, ctx), injectivity_kind(s, ctx), ramification_condition(s.D)};
}

namespace {

std::vector<StratumRow> enumerate(const StrataContext& ctx, bool reduced) {
  std::vector<StratumRow> rows;
  for (const auto& D : effective_subdivisors(ctx.d_prime)) {
    const int deg = D.degree();
    const int hi = floor_div(ctx.d, 2);
    const int lo = reduced ? ceil_div(ctx.d - deg, 2) : ceil_div(ctx.d - 2 * deg, 2);
    for (int m = hi; m >= lo; --m) {
      Stratum s{D, m};
      rows.push_back({s, stratum_info(s, ctx)});
    }
  }
  return rows;
}

}  // namespace

std::vector<StratumRow> enumerate_strata(const StrataContext& ctx) { return enumerate(ctx, true); }

std::vector<StratumRow> enumerate_full_strata(const StrataContext& ctx) { return enumerate(ctx, false); }

int max_stratum_dim(const StrataContext& ctx) {
  int best = -1;
  for (const auto& row : enumerate_strata(ctx)) best = std::max(best, row.info.dim);
  return best;
}

int d_m(int d, int m) { return ceil_div(d - 2 * m, 2); }

ConnectivityGraph connectivity_graph(const StrataContext& ctx) {
  ConnectivityGraph graph;
  const int top = floor_div(ctx.d, 2);
  const int bottom = ceil_div(ctx.d - 2 * ctx.d_L(), 2);
  for (int m = bottom; m <= top; ++m) graph.nodes.push_back(m);

  for (int m : graph.nodes) {
    if (m == top) continue;
    const int dm = d_m(ctx.d, m);
    Divisor witness = divisor_of_degree(ctx.d_prime, dm);
    const Stratum s{witness, m};
    if (!is_valid(s, ctx)) throw Error(ErrorCode::InvariantFailure, "edge stratum is not admissible");
    const int other = partner_m(s, ctx);
    if (!is_valid(Stratum{witness, other}, ctx)) {
      throw Error(ErrorCode::InvariantFailure, "partner stratum is not admissible");
    }
    graph.edges.push_back({m, other, std::move(witness)});
  }

  // Breadth-first search over the undirected edges.
  std::map<int, std::vector<int>> adj;
  for (const auto& e : graph.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::set<int> seen;
  std::queue<int> todo;
  if (!graph.nodes.empty()) {
    todo.push(graph.nodes.front());
    seen.insert(graph.nodes.front());
  }
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop();
    for (int w : adj[v])
      if (seen.insert(w).second) todo.push(w);
  }
  graph.connected = !graph.nodes.empty() && seen.size() == graph.nodes.size() &&
                    std::all_of(seen.begin(), seen.end(), [&](int v) {
                      return std::binary_search(graph.nodes.begin(), graph.nodes.end(), v);
                    });
  return graph;
}

Stratum embed_into_larger(const Stratum& s, const StrataContext& ctx, const Divisor& d_tilde) {
  if (!leq(ctx.d_prime, d_tilde) || d_tilde == ctx.d_prime) {
    throw Error(ErrorCode::NotLarger, "'" + d_tilde.to_string() + "' is not strictly larger than D'");
  }
  if (!is_valid(s, ctx)) throw Error(ErrorCode::InvalidArgument, "stratum is not valid in the source context");
  return {d_tilde - ctx.d_prime + s.D, s.m};
}

nlohmann::ordered_json strata_report(const StrataContext& ctx) {
  using json = nlohmann::ordered_json;
  json out;
  out["g"] = ctx.g;
  out["d"] = ctx.d;
  out["d_L"] = ctx.d_L();
  json dp;
  to_json(dp, ctx.d_prime);
  out["dprime"] = dp;
  json rows = json::array();
  for (const auto& row : enumerate_strata(ctx)) {
    json r;
    json dj;
    to_json(dj, row.stratum.D);
    r["D"] = dj;
    r["m"] = row.stratum.m;
    r["dim"] = row.info.dim;
    r["partner_m"] = row.info.partner_m;
    r["injectivity"] = std::string(to_string(row.info.injectivity));
    r["ramification_condition"] = row.info.ramification_condition;
    rows.push_back(std::move(r));
  }
  out["strata"] = std::move(rows);
  const auto graph = connectivity_graph(ctx);
  json g;
  g["nodes"] = graph.nodes;
  json edges = json::array();
  for (const auto& e : graph.edges) {
    json ej;
    ej["from"] = e.from;
    ej["to"] = e.to;
    json w;
    to_json(w, e.witness);
    ej["witness"] = w;
    edges.push_back(std::move(ej));
  }
  g["edges"] = std::move(edges);
  g["connected"] = graph.connected;
  out["graph"] = std::move(g);
  json summary;
  summary["max_dim"] = max_stratum_dim(ctx);
  summary["expected_dim"] = ctx.d_L() + ctx.g - 1;
  out["summary"] = std::move(summary);
  return out;
}

}  // namespace hf
