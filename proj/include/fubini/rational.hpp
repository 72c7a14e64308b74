#ifndef FUBINI_RATIONAL_HPP
#define FUBINI_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

#include "fubini/error.hpp"

namespace fubini {

using Int = mpz_class;

// Arbitrary-precision rational number, always canonical (lowest terms,
// positive denominator). Thin wrapper over GMP's mpq_class that turns
// division by zero into an exception instead of a SIGFPE.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(const Int& n) : q_(n) {}
  Rational(long num, long den);
  Rational(const Int& num, const Int& den);

  // Parses "p/q" or "p" with optional sign. Throws UsageError on bad input.
  static Rational parse(const std::string& s);

  Int numerator() const { return Int(q_.get_num()); }
  Int denominator() const { return Int(q_.get_den()); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  // Multiplicative inverse; throws UsageError on zero.
  Rational inverse() const;
  // Integer power, negative exponents allowed for nonzero values.
  Rational pow(long e) const;

  static Rational binomial(unsigned long n, unsigned long k);
  static Rational factorial(unsigned long n);

  // Canonical rendering: "p" when integral, else "p/q".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

Int binomial_int(unsigned long n, unsigned long k);
Int factorial_int(unsigned long n);

}  // namespace fubini

#endif
