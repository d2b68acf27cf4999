#pragma once

// Divisors on an abstract curve: finite formal sums of labelled points with
// integer multiplicities. Only multiplicities matter; points carry no geometry.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include <nlohmann/json_fwd.hpp>

namespace hf {

/// An opaque point label.
class Point {
 public:
  Point() = default;
  explicit Point(std::string label) : label_(std::move(label)) {}
  const std::string& label() const { return label_; }
  auto operator<=>(const Point&) const = default;

 private:
  std::string label_;
};

class Divisor {
 public:
  Divisor() = default;
  Divisor(std::initializer_list<std::pair<std::string, int>> terms);

  static Divisor point(const std::string& label, int mult = 1);

  /// Compact text form: "2p+3q", "p - q", "0". Labels are identifiers [A-Za-z_][A-Za-z0-9_']*.
  static Divisor parse(const std::string& text);

  /// Coefficient at p (0 when absent).
  int operator()(const Point& p) const;
  int operator()(const std::string& label) const { return (*this)(Point(label)); }

  /// Sets the coefficient at p; a zero coefficient removes the entry.
  void set(const Point& p, int mult);

  const std::map<Point, int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  std::set<Point> support() const;
  bool is_effective() const;

  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  Divisor& operator*=(int k);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator-(Divisor a) { return a *= -1; }
  friend Divisor operator*(int k, Divisor a) { return a *= k; }

  friend bool operator==(const Divisor&, const Divisor&) = default;
  /// Total order on canonical forms (used only for sorting and map keys).
  friend bool operator<(const Divisor& a, const Divisor& b) { return a.terms_ < b.terms_; }

  std::string to_string() const;

 private:
  std::map<Point, int> terms_;
};

Divisor add(const Divisor& a, const Divisor& b);
/// Pointwise partial order.
bool leq(const Divisor& a, const Divisor& b);
Divisor min(const Divisor& a, const Divisor& b);
Divisor max(const Divisor& a, const Divisor& b);

struct EvenOddSplit {
  Divisor even_part;
  Divisor odd_part;
};
EvenOddSplit even_odd_split(const Divisor& ds);

/// D/2; throws Error(OddMultiplicity) unless every multiplicity is even.
Divisor half(const Divisor& d);
std::optional<Divisor> try_half(const Divisor& d);

/// Sum of m/2 over even points and (m-1)/2 over odd points of an effective D_s.
Divisor d_prime_s(const Divisor& ds);

/// All effective divisors 0 <= D <= bound, ordered by degree then canonical form.
std::vector<Divisor> effective_subdivisors(const Divisor& bound);

void to_json(nlohmann::json& j, const Divisor& d);
void from_json(const nlohmann::json& j, Divisor& d);
void to_json(nlohmann::ordered_json& j, const Divisor& d);

/// Accepts the JSON object form or a string in the compact text form.
Divisor divisor_from_any(const nlohmann::json& j);

}  // namespace hf
