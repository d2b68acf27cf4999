#include "hitchin/divisor.hpp"

#include "hitchin/errors.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <functional>

namespace hf {

Divisor::Divisor(std::initializer_list<std::pair<std::string, int>> terms) {
  for (const auto& [label, mult] : terms) set(Point(label), (*this)(Point(label)) + mult);
}

Divisor Divisor::point(const std::string& label, int mult) {
  Divisor d;
  d.set(Point(label), mult);
  return d;
}

int Divisor::operator()(const Point& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void Divisor::set(const Point& p, int mult) {
  if (mult == 0) terms_.erase(p);
  else terms_[p] = mult;
}

int Divisor::degree() const {
  int deg = 0;
  for (const auto& [p, m] : terms_) deg += m;
  return deg;
}

std::set<Point> Divisor::support() const {
  std::set<Point> out;
  for (const auto& [p, m] : terms_) out.insert(p);
  return out;
}

bool Divisor::is_effective() const {
  for (const auto& [p, m] : terms_)
    if (m < 0) return false;
  return true;
}

Divisor& Divisor::operator+=(const Divisor& other) {
  for (const auto& [p, m] : other.terms_) set(p, (*this)(p) + m);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  for (const auto& [p, m] : other.terms_) set(p, (*this)(p) - m);
  return *this;
}

Divisor& Divisor::operator*=(int k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, m] : terms_) m *= k;
  return *this;
}

std::string Divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, m] : terms_) {
    if (m < 0) out += first ? "-" : " - ";
    else if (!first) out += " + ";
    int a = m < 0 ? -m : m;
    if (a != 1) out += std::to_string(a);
    out += p.label();
    first = false;
  }
  return out;
}

Divisor Divisor::parse(const std::string& text) {
  Divisor d;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> Divisor {
    throw Error(ErrorCode::InvalidArgument, "cannot parse divisor '" + text + "': " + why);
  };
  skip_ws();
  if (i == text.size()) fail("empty input");
  if (const auto last = text.find_last_not_of(" \t\n\r"); text.substr(i, last + 1 - i) == "0") return d;
  bool expect_term = true;
  int sign = 1;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    char c = text[i];
    if (c == '+' || c == '-') {
      if (!expect_term && sign == 0) fail("dangling sign");
      sign = (c == '-') ? -sign : sign;
      expect_term = true;
      ++i;
      continue;
    }
    if (!expect_term) fail("missing '+' or '-' between terms");
    long coef = 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      coef = std::stol(text.substr(start, i - start));
      skip_ws();
      if (text.substr(i, 1) == "*") {
        ++i;
        skip_ws();
      }
    }
    if (i == text.size() || !(std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
      fail("expected a point label");
    }
    std::size_t start = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' || text[i] == '\'')) {
      ++i;
    }
    Point p(text.substr(start, i - start));
    d.set(p, d(p) + sign * static_cast<int>(coef));
    sign = 1;
    expect_term = false;
  }
  if (expect_term) fail("trailing sign");
  return d;
}

Divisor add(const Divisor& a, const Divisor& b) { return a + b; }

bool leq(const Divisor& a, const Divisor& b) {
  for (const auto& [p, m] : a.terms())
    if (m > b(p)) return false;
  for (const auto& [p, m] : b.terms())
    if (a(p) > m) return false;
  return true;
}

namespace {

Divisor pointwise(const Divisor& a, const Divisor& b, const std::function<int(int, int)>& op) {
  Divisor out;
  auto pts = a.support();
  for (const auto& p : b.support()) pts.insert(p);
  for (const auto& p : pts) out.set(p, op(a(p), b(p)));
  return out;
}

}  // namespace

Divisor min(const Divisor& a, const Divisor& b) {
  return pointwise(a, b, [](int x, int y) { return std::min(x, y); });
}

Divisor max(const Divisor& a, const Divisor& b) {
  return pointwise(a, b, [](int x, int y) { return std::max(x, y); });
}

EvenOddSplit even_odd_split(const Divisor& ds) {
  EvenOddSplit out;
  for (const auto& [p, m] : ds.terms()) (m % 2 == 0 ? out.even_part : out.odd_part).set(p, m);
  return out;
}

std::optional<Divisor> try_half(const Divisor& d) {
  Divisor out;
  for (const auto& [p, m] : d.terms()) {
    if (m % 2 != 0) return std::nullopt;
    out.set(p, m / 2);
  }
  return out;
}

Divisor half(const Divisor& d) {
  auto h = try_half(d);
  if (!h) throw Error(ErrorCode::OddMultiplicity, "'" + d.to_string() + "' is not twice a divisor");
  return *h;
}

Divisor d_prime_s(const Divisor& ds) {
  if (!ds.is_effective()) throw Error(ErrorCode::InvalidArgument, "D_s must be effective");
  Divisor out;
  for (const auto& [p, m] : ds.terms()) out.set(p, m % 2 == 0 ? m / 2 : (m - 1) / 2);
  return out;
}

std::vector<Divisor> effective_subdivisors(const Divisor& bound) {
  if (!bound.is_effective()) throw Error(ErrorCode::InvalidArgument, "bound must be effective");
  std::vector<std::pair<Point, int>> pts(bound.terms().begin(), bound.terms().end());
  std::vector<Divisor> out;
  Divisor current;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == pts.size()) {
      out.push_back(current);
      return;
    }
    for (int k = 0; k <= pts[i].second; ++k) {
      current.set(pts[i].first, k);
      rec(i + 1);
    }
    current.set(pts[i].first, 0);
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(), [](const Divisor& a, const Divisor& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  return out;
}

namespace {

template <typename Json>
void write_divisor(Json& j, const Divisor& d) {
  Json points = Json::array();
  for (const auto& [p, m] : d.terms()) {  // std::map keeps labels sorted
    Json entry = Json::object();
    entry["label"] = p.label();
    entry["mult"] = m;
    points.push_back(std::move(entry));
  }
  j = Json::object();
  j["points"] = std::move(points);
}

}  // namespace

void to_json(nlohmann::json& j, const Divisor& d) { write_divisor(j, d); }
void to_json(nlohmann::ordered_json& j, const Divisor& d) { write_divisor(j, d); }

void from_json(const nlohmann::json& j, Divisor& d) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    throw Error(ErrorCode::InvalidArgument, "divisor JSON must be {\"points\": [...]}");
  }
  d = Divisor();
  for (const auto& entry : j["points"]) {
    if (!entry.is_object() || !entry.contains("label") || !entry["label"].is_string() || !entry.contains("mult") ||
        !entry["mult"].is_number_integer()) {
      throw Error(ErrorCode::InvalidArgument, "divisor entry must be {\"label\": str, \"mult\": int}");
    }
    Point p(entry["label"].get<std::string>());
    d.set(p, d(p) + entry["mult"].get<int>());
  }
}

Divisor divisor_from_any(const nlohmann::json& j) {
  if (j.is_string()) return Divisor::parse(j.get<std::string>());
  return j.get<Divisor>();
}

}  // namespace hf
