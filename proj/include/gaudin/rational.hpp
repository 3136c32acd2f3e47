#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace gaudin {

/// Exact rational scalar, kept in lowest terms with a positive denominator.
/// All operators are eager and return canonical values; there is no rounding
/// anywhere. Serializes as "p/q", or "p" when the denominator is one.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long value) : q_(value) {}  // implicit: integer literals are scalars
  Rational(long num, long den);
  explicit Rational(mpz_class value) : q_(std::move(value)) {}
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p" or "p/q" in base 10. Throws std::invalid_argument on
  /// malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ + b.q_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ - b.q_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_));
  }
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;  // invariant: canonical (coprime, positive denominator)
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace gaudin
