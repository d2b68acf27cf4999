#pragma once

// Exact finite-dimensional linear algebra over a field: subspaces of F^n kept
// in reduced row echelon form, so equality of subspaces is equality of bases.

#include "hitchin/errors.hpp"
#include "hitchin/scalar.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hf {

template <typename F>
using Vec = std::vector<F>;

template <typename F>
bool is_zero_vec(std::span<const F> v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

/// Row-reduces `rows` in place; returns the pivot column of each surviving row.
/// Zero rows are dropped.
template <typename F>
std::vector<std::size_t> rref(std::vector<Vec<F>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && is_zero(rows[sel][c])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const F inv = F(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      const F factor = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

template <typename F>
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, std::vector<Vec<F>> vectors) {
    for (const auto& v : vectors) {
      if (v.size() != ambient) throw Error(ErrorCode::InvalidArgument, "vector length != ambient dimension");
    }
    Subspace s(ambient);
    s.pivots_ = rref(vectors, ambient);
    s.basis_ = std::move(vectors);
    return s;
  }

  static Subspace full(std::size_t ambient) {
    std::vector<Vec<F>> rows(ambient, Vec<F>(ambient, F(0)));
    for (std::size_t i = 0; i < ambient; ++i) rows[i][i] = F(1);
    return span(ambient, std::move(rows));
  }

  /// Null space of the matrix whose rows are `functionals`.
  static Subspace kernel(std::size_t ambient, std::vector<Vec<F>> functionals) {
    auto pivots = rref(functionals, ambient);
    std::vector<bool> is_pivot(ambient, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec<F>> basis;
    for (std::size_t free = 0; free < ambient; ++free) {
      if (is_pivot[free]) continue;
      Vec<F> v(ambient, F(0));
      v[free] = F(1);
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -functionals[r][free];
      basis.push_back(std::move(v));
    }
    return span(ambient, std::move(basis));
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec<F>>& basis() const { return basis_; }

  bool contains(std::span<const F> v) const {
    if (v.size() != ambient_) return false;
    Vec<F> w(v.begin(), v.end());
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const F c = w[pivots_[r]];
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < ambient_; ++j) w[j] -= c * basis_[r][j];
    }
    return is_zero_vec<F>(w);
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (const auto& v : other.basis_)
      if (!contains(std::span<const F>(v))) return false;
    return true;
  }

  Subspace sum(const Subspace& other) const {
    auto rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, std::move(rows));
  }

  /// Image under a linear map given as a function on vectors.
  template <typename Map>
  Subspace image(std::size_t target_ambient, Map&& map) const {
    std::vector<Vec<F>> rows;
    rows.reserve(basis_.size());
    for (const auto& v : basis_) rows.push_back(map(v));
    return span(target_ambient, std::move(rows));
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  std::vector<Vec<F>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hf
