#include "hitchin/localring.hpp"

#include "hitchin/errors.hpp"

namespace hf {

std::string_view to_string(SingularityKind kind) { return kind == SingularityKind::Node ? "Node" : "Cusp"; }

SingularityKind kind_of(int m) { return m % 2 == 0 ? SingularityKind::Node : SingularityKind::Cusp; }

BivariatePolynomial BivariatePolynomial::constant(const Rational& c) {
  BivariatePolynomial g;
  g.add_term(0, 0, c);
  return g;
}

BivariatePolynomial BivariatePolynomial::x() {
  BivariatePolynomial g;
  g.add_term(1, 0, Rational(1));
  return g;
}

BivariatePolynomial BivariatePolynomial::z() {
  BivariatePolynomial g;
  g.add_term(0, 1, Rational(1));
  return g;
}

void BivariatePolynomial::add_term(int i, int j, const Rational& coeff) {
  if (i < 0 || j < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent in polynomial");
  Rational& slot = terms_[{i, j}];
  slot += coeff;
  if (is_zero(slot)) terms_.erase({i, j});
}

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e.first, e.second, c);
  return out;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

Vec<Rational> flatten(const JetElement& e) {
  Vec<Rational> out;
  out.reserve(static_cast<std::size_t>(e.branch_count() * e.order()));
  for (const auto& b : e.branches) out.insert(out.end(), b.coeffs().begin(), b.coeffs().end());
  return out;
}

JetElement unflatten(std::span<const Rational> coords, int branches, int order) {
  if (coords.size() != static_cast<std::size_t>(branches * order)) {
    throw Error(ErrorCode::InvalidArgument, "coordinate vector does not match branches * order");
  }
  JetElement e;
  for (int b = 0; b < branches; ++b) {
    auto first = coords.begin() + b * order;
    e.branches.emplace_back(order, std::vector<Rational>(first, first + order));
  }
  return e;
}

LocalAlgebra::LocalAlgebra(int m, int order) : m_(m), kind_(kind_of(m)), order_(order == 0 ? m : order) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "A_{m-1} needs m >= 2");
  if (order_ < 1) throw Error(ErrorCode::InvalidArgument, "truncation order must be positive");
}

std::vector<Vec<Rational>> LocalAlgebra::constraints() const {
  std::vector<Vec<Rational>> rows;
  const std::size_t n = flat_dim();
  if (kind_ == SingularityKind::Node) {
    for (int k = 0; k <= (m_ - 2) / 2 && k < order_; ++k) {
      Vec<Rational> row(n, Rational(0));
      row[k] = 1;
      row[order_ + k] = -1;
      rows.push_back(std::move(row));
    }
  } else {
    for (int k = 1; k <= m_ - 2 && k < order_; k += 2) {
      Vec<Rational> row(n, Rational(0));
      row[k] = 1;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Subspace<Rational> LocalAlgebra::as_subspace() const { return Subspace<Rational>::kernel(flat_dim(), constraints()); }

JetElement LocalAlgebra::x() const { return phi(BivariatePolynomial::x(), *this); }
JetElement LocalAlgebra::z() const { return phi(BivariatePolynomial::z(), *this); }
JetElement LocalAlgebra::one() const { return phi(BivariatePolynomial::constant(Rational(1)), *this); }

JetElement phi_even(const BivariatePolynomial& g, int m, int order) {
  if (m < 2 || m % 2 != 0) throw Error(ErrorCode::InvalidArgument, "phi_even needs even m >= 2");
  Jet<Rational> b1(order), b2(order);
  for (const auto& [e, c] : g.terms()) {
    const auto [i, j] = e;
    const long k = static_cast<long>(m / 2) * i + j;
    if (k >= order) continue;
    b1[static_cast<int>(k)] += c;
    b2[static_cast<int>(k)] += (i % 2 == 0) ? Rational(c) : Rational(-c);
  }
  return JetElement::node(std::move(b1), std::move(b2));
}

JetElement phi_odd(const BivariatePolynomial& g, int m, int order) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::InvalidArgument, "phi_odd needs odd m >= 3");
  Jet<Rational> b(order);
  for (const auto& [e, c] : g.terms()) {
    const auto [i, j] = e;
    const long k = static_cast<long>(m) * i + 2L * j;
    if (k >= order) continue;
    b[static_cast<int>(k)] += c;
  }
  return JetElement::cusp(std::move(b));
}

JetElement phi(const BivariatePolynomial& g, const LocalAlgebra& alg) {
  return alg.kind() == SingularityKind::Node ? phi_even(g, alg.m(), alg.order()) : phi_odd(g, alg.m(), alg.order());
}

bool member(const JetElement& e, const LocalAlgebra& alg) {
  if (e.branch_count() != alg.branch_count()) {
    throw Error(ErrorCode::InvalidArgument, "jet branch count does not match singularity kind");
  }
  if (e.order() < alg.m()) {
    throw Error(ErrorCode::TruncationTooShort,
                "order " + std::to_string(e.order()) + " < m = " + std::to_string(alg.m()));
  }
  const LocalAlgebra at_order(alg.m(), e.order());
  const auto coords = flatten(e);
  for (const auto& row : at_order.constraints()) {
    Rational acc(0);
    for (std::size_t i = 0; i < row.size(); ++i)
      if (!is_zero(row[i])) acc += row[i] * coords[i];
    if (!is_zero(acc)) return false;
  }
  return true;
}

JetElement multiply(const JetElement& a, const JetElement& b) {
  if (a.branch_count() != b.branch_count()) throw Error(ErrorCode::InvalidArgument, "branch count mismatch");
  JetElement out;
  for (int i = 0; i < a.branch_count(); ++i) out.branches.push_back(a.branches[i] * b.branches[i]);
  return out;
}

JetSubspace JetSubspace::span(int branches, int order, const std::vector<JetElement>& gens) {
  std::vector<Vec<Rational>> rows;
  for (const auto& g : gens) {
    if (g.branch_count() != branches || g.order() != order) {
      throw Error(ErrorCode::InvalidArgument, "generator shape does not match subspace");
    }
    rows.push_back(flatten(g));
  }
  return {branches, order, Subspace<Rational>::span(static_cast<std::size_t>(branches * order), std::move(rows))};
}

JetSubspace JetSubspace::full(int branches, int order) {
  return {branches, order, Subspace<Rational>::full(static_cast<std::size_t>(branches * order))};
}

std::vector<JetElement> JetSubspace::basis() const {
  std::vector<JetElement> out;
  for (const auto& v : space.basis()) out.push_back(unflatten(v, branches, order));
  return out;
}

JetSubspace JetSubspace::truncated(int new_order) const {
  if (new_order > order) throw Error(ErrorCode::InvalidArgument, "cannot truncate to a higher order");
  const int nb = branches, no = order;
  auto sub = space.image(static_cast<std::size_t>(nb * new_order), [&](const Vec<Rational>& v) {
    Vec<Rational> w;
    w.reserve(static_cast<std::size_t>(nb * new_order));
    for (int b = 0; b < nb; ++b) w.insert(w.end(), v.begin() + b * no, v.begin() + b * no + new_order);
    return w;
  });
  return {branches, new_order, std::move(sub)};
}

namespace {

void check_shape(const JetSubspace& s, const LocalAlgebra& alg) {
  if (s.branches != alg.branch_count()) {
    throw Error(ErrorCode::InvalidArgument, "subspace branch count does not match singularity kind");
  }
}

}  // namespace

JetSubspace maximal_ideal_times(const JetSubspace& s, const LocalAlgebra& alg) {
  check_shape(s, alg);
  const LocalAlgebra at(alg.m(), s.order);
  const JetElement gx = at.x(), gz = at.z();
  std::vector<JetElement> prods;
  for (const auto& v : s.basis()) {
    prods.push_back(multiply(gx, v));
    prods.push_back(multiply(gz, v));
  }
  return JetSubspace::span(s.branches, s.order, prods);
}

bool is_module(const JetSubspace& s, const LocalAlgebra& alg) {
  return s.space.contains(maximal_ideal_times(s, alg).space);
}

JetSubspace module_span(const std::vector<JetElement>& generators, const LocalAlgebra& alg) {
  JetSubspace s = JetSubspace::span(alg.branch_count(), alg.order(), generators);
  while (true) {
    JetSubspace grown{s.branches, s.order, s.space.sum(maximal_ideal_times(s, alg).space)};
    if (grown.dim() == s.dim()) return s;
    s = std::move(grown);
  }
}

int min_generators(const JetSubspace& s, const LocalAlgebra& alg) {
  if (!is_module(s, alg)) throw Error(ErrorCode::InvalidArgument, "not a module over the local algebra");
  return static_cast<int>(s.dim() - maximal_ideal_times(s, alg).dim());
}

bool is_free_rank1(const JetSubspace& s, const LocalAlgebra& alg) {
  const LocalAlgebra at(alg.m(), s.order);
  return min_generators(s, alg) == 1 && s.dim() == at.as_subspace().dim();
}

}  // namespace hf
