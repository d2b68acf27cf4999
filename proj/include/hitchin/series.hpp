#pragma once

// Truncated power series. `Jet` has a fixed truncation order N (coefficients of
// t^0..t^{N-1}); `Laurent` tracks its own absolute precision O(t^prec) so that
// products and quotients with poles know which coefficients are still exact.

#include "hitchin/errors.hpp"
#include "hitchin/scalar.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <string>
#include <vector>

namespace hf {

template <typename F>
class Jet {
 public:
  Jet() = default;
  explicit Jet(int order) : c_(static_cast<std::size_t>(std::max(order, 0)), F(0)) {}
  Jet(int order, std::vector<F> coeffs) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(std::max(order, 0)), F(0));
  }

  static Jet constant(int order, const F& value) {
    Jet j(order);
    if (order > 0) j.c_[0] = value;
    return j;
  }
  static Jet monomial(int order, int exponent, const F& value = F(1)) {
    Jet j(order);
    if (exponent >= 0 && exponent < order) j.c_[exponent] = value;
    return j;
  }

  int order() const { return static_cast<int>(c_.size()); }
  const F& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  F& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<F>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const F& x) { return hf::is_zero(x); });
  }
  /// Lowest exponent with a nonzero coefficient; nullopt for the zero jet.
  std::optional<int> valuation() const {
    for (int k = 0; k < order(); ++k)
      if (!hf::is_zero(c_[k])) return k;
    return std::nullopt;
  }

  Jet truncated(int order) const { return Jet(order, std::vector<F>(c_.begin(), c_.begin() + std::min(order, this->order()))); }

  /// Multiplication by t^k (k may be negative; coefficients falling below t^0 are dropped).
  Jet shifted(int k) const {
    Jet out(order());
    for (int i = 0; i < order(); ++i) {
      int j = i + k;
      if (j >= 0 && j < order()) out.c_[j] = c_[i];
    }
    return out;
  }

  Jet& operator+=(const Jet& o) {
    require_same(o);
    for (int k = 0; k < order(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    require_same(o);
    for (int k = 0; k < order(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Jet& operator*=(const F& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const F& s) { return a *= s; }
  friend Jet operator-(Jet a) { return a *= F(-1); }

  /// Truncated Cauchy product.
  friend Jet operator*(const Jet& a, const Jet& b) {
    a.require_same(b);
    Jet out(a.order());
    for (int i = 0; i < a.order(); ++i) {
      if (hf::is_zero(a.c_[i])) continue;
      for (int j = 0; i + j < a.order(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;
  }

  friend bool operator==(const Jet& a, const Jet& b) { return a.c_ == b.c_; }

 private:
  void require_same(const Jet& o) const {
    if (o.order() != order()) throw Error(ErrorCode::InvalidArgument, "jets of different truncation order");
  }

  std::vector<F> c_;
};

/// Sentinel precision for series known exactly (finite Laurent polynomials).
inline constexpr int kExact = INT_MAX / 4;

/// Laurent series sum_{k >= low} a_k t^k + O(t^prec).
template <typename F>
class Laurent {
 public:
  Laurent() = default;

  /// Exact Laurent polynomial with coefficient of t^{low+i} equal to coeffs[i].
  Laurent(int low, std::vector<F> coeffs, int prec = kExact) : low_(low), c_(std::move(coeffs)), prec_(prec) {
    normalize();
  }

  static Laurent zero(int prec = kExact) { return Laurent(0, {}, prec); }
  static Laurent constant(const F& v) { return Laurent(0, {v}); }
  static Laurent monomial(int exponent, const F& v = F(1)) { return Laurent(exponent, {v}); }
  static Laurent from_jet(const Jet<F>& j, bool exact = true) {
    return Laurent(0, j.coeffs(), exact ? kExact : j.order());
  }

  int precision() const { return prec_; }
  bool exact() const { return prec_ >= kExact; }

  F coeff(int k) const {
    if (k >= prec_) throw Error(ErrorCode::InvalidArgument, "coefficient beyond known precision");
    if (k < low_ || k >= low_ + static_cast<int>(c_.size())) return F(0);
    return c_[static_cast<std::size_t>(k - low_)];
  }

  /// Lowest exponent with a nonzero known coefficient; nullopt if zero to precision.
  std::optional<int> valuation() const {
    if (c_.empty()) return std::nullopt;
    return low_;
  }
  /// Valuation, or the precision when the series is zero to its precision.
  int val_or_prec() const { return c_.empty() ? prec_ : low_; }
  bool is_zero() const { return c_.empty(); }

  /// Lowest exponent that may be nonzero and highest stored exponent + 1.
  int low() const { return c_.empty() ? 0 : low_; }
  int high() const { return c_.empty() ? 0 : low_ + static_cast<int>(c_.size()); }

  Laurent with_precision(int prec) const {
    Laurent out = *this;
    out.prec_ = std::min(prec_, prec);
    out.normalize();
    return out;
  }

  /// Coefficients of t^0..t^{n-1}; requires nonnegative valuation below n and precision >= n.
  Jet<F> to_jet(int n) const {
    if (prec_ < n) throw Error(ErrorCode::InvalidArgument, "precision too low for requested jet");
    Jet<F> j(n);
    for (int k = std::min(low(), n); k < n; ++k) {
      if (k < 0) continue;
      j[k] = coeff(k);
    }
    return j;
  }

  Laurent& operator+=(const Laurent& o) { return *this = combine(*this, o, F(1)); }
  Laurent& operator-=(const Laurent& o) { return *this = combine(*this, o, F(-1)); }

  friend Laurent operator+(const Laurent& a, const Laurent& b) { return combine(a, b, F(1)); }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return combine(a, b, F(-1)); }
  friend Laurent operator-(const Laurent& a) { return a * F(-1); }

  friend Laurent operator*(const Laurent& a, const F& s) {
    Laurent out = a;
    for (auto& x : out.c_) x *= s;
    out.normalize();
    return out;
  }
  friend Laurent operator*(const F& s, const Laurent& a) { return a * s; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    // (t^va u + O(t^pa)) (t^vb w + O(t^pb)) is known up to min(va + pb, vb + pa).
    long long pa = a.prec_, pb = b.prec_;
    long long va = a.val_or_prec(), vb = b.val_or_prec();
    long long prec = std::min<long long>({va + pb, vb + pa, static_cast<long long>(kExact)});
    if (a.exact() && b.exact()) prec = kExact;
    Laurent out;
    out.prec_ = static_cast<int>(prec);
    if (a.c_.empty() || b.c_.empty()) {
      out.normalize();
      return out;
    }
    out.low_ = a.low_ + b.low_;
    long long top = std::min<long long>(static_cast<long long>(a.high()) + b.high() - 1, prec);
    if (top > out.low_) out.c_.assign(static_cast<std::size_t>(top - out.low_), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (hf::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        std::size_t k = i + j;
        if (k >= out.c_.size()) break;
        out.c_[k] += a.c_[i] * b.c_[j];
      }
    }
    out.normalize();
    return out;
  }

  /// Inverse of a series with a known leading term, computed to absolute precision `prec`
  /// (capped by what the input's own precision allows).
  Laurent inverse(int prec) const {
    if (c_.empty()) throw Error(ErrorCode::DivisionByNonUnit, "inverse of a series that is zero to its precision");
    const int v = low_;
    // Relative precision available for the unit part u = t^{-v} * this.
    long long rel = exact() ? static_cast<long long>(prec) + v : static_cast<long long>(prec_) - v;
    long long want = static_cast<long long>(prec) + v;  // need u^{-1} known to t^{prec + v}
    long long n = std::max<long long>(0, std::min(rel, want));
    std::vector<F> inv(static_cast<std::size_t>(n), F(0));
    if (n > 0) {
      const F lead_inv = F(1) / c_[0];
      inv[0] = lead_inv;
      for (long long k = 1; k < n; ++k) {
        F acc(0);
        for (long long j = 1; j <= k && j < static_cast<long long>(c_.size()); ++j) acc += c_[j] * inv[k - j];
        inv[k] = -acc * lead_inv;
      }
    }
    return Laurent(-v, std::move(inv), static_cast<int>(n - v));
  }

  /// a / b to absolute precision at most `prec`.
  friend Laurent divide(const Laurent& a, const Laurent& b, int prec) {
    if (a.is_zero()) return zero(std::min(prec, a.prec_ - b.val_or_prec()));
    // The product's precision is min(va + p_inv, p_a - vb), so the inverse needs prec - va.
    Laurent inv = b.inverse(prec - a.low());
    return (a * inv).with_precision(prec);
  }

  /// Equality of all coefficients below min(precision, bound).
  friend bool agree(const Laurent& a, const Laurent& b, int bound = kExact) {
    int limit = std::min({a.prec_, b.prec_, bound});
    int from = std::min(a.low(), b.low());
    int to = std::min(limit, std::max(a.high(), b.high()));
    for (int k = from; k < to; ++k)
      if (a.coeff(k) != b.coeff(k)) return false;
    return true;
  }

 private:
  static Laurent combine(const Laurent& a, const Laurent& b, const F& sign) {
    Laurent out;
    out.prec_ = std::min(a.prec_, b.prec_);
    if (a.c_.empty() && b.c_.empty()) return out;
    int lo = std::min(a.c_.empty() ? b.low_ : a.low_, b.c_.empty() ? a.low_ : b.low_);
    int hi = std::max(a.high(), b.high());
    out.low_ = lo;
    out.c_.assign(static_cast<std::size_t>(std::max(hi - lo, 0)), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[a.low_ - lo + i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out.c_[b.low_ - lo + i] += sign * b.c_[i];
    out.normalize();
    return out;
  }

  void normalize() {
    // Drop everything at or above the precision, then trim zeros at both ends.
    if (prec_ < kExact) {
      long long keep = static_cast<long long>(prec_) - low_;
      if (keep <= 0) c_.clear();
      else if (static_cast<long long>(c_.size()) > keep) c_.resize(static_cast<std::size_t>(keep));
    }
    while (!c_.empty() && hf::is_zero(c_.back())) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && hf::is_zero(c_[lead])) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
    if (c_.empty()) low_ = 0;
  }

  int low_ = 0;
  std::vector<F> c_;
  int prec_ = kExact;
};

}  // namespace hf
