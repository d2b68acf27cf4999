#include "hitchin/scalar.hpp"

#include "hitchin/errors.hpp"

#include <regex>

namespace hf {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) {
    throw Error(ErrorCode::InvalidArgument, "not a rational: '" + text + "'");
  }
  mpz_class num(match[1].str().front() == '+' ? match[1].str().substr(1) : match[1].str());
  mpz_class den(match[2].matched ? match[2].str() : std::string("1"));
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  Rational n = o.norm();
  if (sgn(n) == 0) throw Error(ErrorCode::InvalidArgument, "division by zero in Q(i)");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string to_string(const Gaussian& z) {
  if (is_zero(z.im())) return to_string(z.re());
  return to_string(z.re()) + (sgn(z.im()) < 0 ? "-" : "+") + to_string(Rational(abs(z.im()))) + "i";
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << to_string(z); }

}  // namespace hf
