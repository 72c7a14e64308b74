#include "fubini/rational.hpp"

#include <atomic>
#include <cctype>
#include <ostream>

namespace fubini {

namespace {
std::atomic<int> g_degree_guard{64};
}  // namespace

int degree_guard() { return g_degree_guard.load(); }

void set_degree_guard(int n) {
  if (n < 0) throw UsageError("degree guard must be nonnegative");
  g_degree_guard.store(n);
}

void check_degree(int n, const char* what) {
  if (n < 0) throw UsageError(std::string(what) + ": negative degree/index");
  if (n > degree_guard())
    throw UsageError(std::string(what) + ": exceeds degree guard (" +
                     std::to_string(degree_guard()) + ")");
}

Rational::Rational(long num, long den) {
  if (den == 0) throw UsageError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw UsageError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw UsageError("empty rational literal");
  auto check_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto strip_plus = [](const std::string& t) { return t[0] == '+' ? t.substr(1) : t; };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!check_int(s)) throw UsageError("bad rational literal: " + s);
    return Rational(Int(strip_plus(s)));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!check_int(num) || !check_int(den))
    throw UsageError("bad rational literal: " + s);
  return Rational(Int(strip_plus(num)), Int(strip_plus(den)));
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw UsageError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw UsageError("inverse of zero");
  Rational r;
  r.q_ = 1 / q_;
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw UsageError("negative power of zero");
    return Rational(0);
  }
  bool neg = e < 0;
  unsigned long a = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), a);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), a);
  Rational r(num, den);
  return neg ? r.inverse() : r;
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
  return Rational(binomial_int(n, k));
}

Rational Rational::factorial(unsigned long n) {
  return Rational(factorial_int(n));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Int binomial_int(unsigned long n, unsigned long k) {
  if (k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial_int(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace fubini
