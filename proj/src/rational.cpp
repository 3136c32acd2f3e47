#include "gaudin/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace gaudin {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  mpq_class q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
  }
  q.canonicalize();
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace gaudin
