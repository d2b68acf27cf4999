#pragma once

// Local rings of plane-curve singularities x^2 = z^m, modelled through their
// normalization. A node (m even) has two smooth branches and
//   O = { (f1, f2) : f1^(k)(0) = f2^(k)(0), k = 0..(m-2)/2 },
// a cusp (m odd) has one branch and
//   O = { f : f^(k)(0) = 0 for odd k <= m-2 }.
// Everything is truncated at t^N. Derivative conditions are stated on raw
// coefficients (coefficient k is f^(k)(0)/k!), which is equivalent and exact.

#include "hitchin/linalg.hpp"
#include "hitchin/scalar.hpp"
#include "hitchin/series.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hf {

enum class SingularityKind { Node, Cusp };

std::string_view to_string(SingularityKind kind);

/// Kind of the A_{m-1} singularity: Node for even m, Cusp for odd m.
SingularityKind kind_of(int m);

/// g(x, z) = sum a_ij x^i z^j.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  static BivariatePolynomial constant(const Rational& c);
  static BivariatePolynomial x();
  static BivariatePolynomial z();

  void add_term(int i, int j, const Rational& coeff);
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

  friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);

 private:
  std::map<std::pair<int, int>, Rational> terms_;
};

/// One jet per branch of the normalization; all branches share the truncation order.
struct JetElement {
  std::vector<Jet<Rational>> branches;

  int branch_count() const { return static_cast<int>(branches.size()); }
  int order() const { return branches.empty() ? 0 : branches.front().order(); }

  static JetElement node(Jet<Rational> b1, Jet<Rational> b2) { return {{std::move(b1), std::move(b2)}}; }
  static JetElement cusp(Jet<Rational> b) { return {{std::move(b)}}; }

  friend bool operator==(const JetElement&, const JetElement&) = default;
};

/// Coordinates of a jet element: branch 1 coefficients, then branch 2.
Vec<Rational> flatten(const JetElement& e);
JetElement unflatten(std::span<const Rational> coords, int branches, int order);

class LocalAlgebra {
 public:
  /// order = 0 selects the default truncation N = m.
  explicit LocalAlgebra(int m, int order = 0);

  int m() const { return m_; }
  SingularityKind kind() const { return kind_; }
  int order() const { return order_; }
  int branch_count() const { return kind_ == SingularityKind::Node ? 2 : 1; }
  std::size_t flat_dim() const { return static_cast<std::size_t>(branch_count() * order_); }

  /// Linear functionals (on flattened coordinates) whose common kernel is the algebra.
  std::vector<Vec<Rational>> constraints() const;
  Subspace<Rational> as_subspace() const;

  /// Images of the coordinate functions; they generate the maximal ideal.
  JetElement x() const;
  JetElement z() const;
  JetElement one() const;

 private:
  int m_;
  SingularityKind kind_;
  int order_;
};

/// g(t^{m/2}, t) on branch 1 and g(-t^{m/2}, t) on branch 2, truncated at N.
JetElement phi_even(const BivariatePolynomial& g, int m, int order);
/// g(t^m, t^2), truncated at N.
JetElement phi_odd(const BivariatePolynomial& g, int m, int order);
/// Dispatches on the algebra's kind, at the algebra's truncation order.
JetElement phi(const BivariatePolynomial& g, const LocalAlgebra& alg);

/// Whether the derivative constraints of the algebra hold.
/// Throws TruncationTooShort when N < m, InvalidArgument on a branch-count mismatch.
bool member(const JetElement& e, const LocalAlgebra& alg);

/// Branchwise truncated product.
JetElement multiply(const JetElement& a, const JetElement& b);

/// A linear subspace of jet elements with a fixed branch count and order.
struct JetSubspace {
  int branches = 1;
  int order = 0;
  Subspace<Rational> space{0};

  static JetSubspace span(int branches, int order, const std::vector<JetElement>& gens);
  static JetSubspace full(int branches, int order);

  std::size_t dim() const { return space.dim(); }
  bool contains(const JetElement& e) const { return space.contains(std::span<const Rational>(flatten(e))); }
  std::vector<JetElement> basis() const;
  /// Image under truncation to a lower order.
  JetSubspace truncated(int new_order) const;

  friend bool operator==(const JetSubspace&, const JetSubspace&) = default;
};

/// Smallest subspace containing the generators and closed under the algebra action.
JetSubspace module_span(const std::vector<JetElement>& generators, const LocalAlgebra& alg);

/// Closure of S under multiplication by the algebra. The action is computed at S's own order.
bool is_module(const JetSubspace& s, const LocalAlgebra& alg);

/// m_p · S: span of x·v, z·v over a basis of S.
JetSubspace maximal_ideal_times(const JetSubspace& s, const LocalAlgebra& alg);

/// Minimal number of generators of S as a module, dim S/mS (Nakayama).
int min_generators(const JetSubspace& s, const LocalAlgebra& alg);

/// Free of rank 1: cyclic and of the same size as the algebra at this truncation.
bool is_free_rank1(const JetSubspace& s, const LocalAlgebra& alg);

}  // namespace hf
