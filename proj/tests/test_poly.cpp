#include "fubini/poly.hpp"

#include "fubini/error.hpp"
#include "helpers.hpp"

#include "doctest.h"

#include <random>
#include <vector>

using namespace fubini;

TEST_CASE("basic construction and queries") {
  XPolyQ z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.coeff(0).is_zero());
  CHECK(z.coeff(17).is_zero());

  XPolyQ c = XPolyQ::constant(Rational(5, 3));
  CHECK(c.degree() == 0);
  CHECK(c.coeff(0) == Rational(5, 3));

  CHECK(XPolyQ::constant(Rational(0)).is_zero());
  CHECK(XPolyQ::monomial(4, Rational(0)).is_zero());
  CHECK_THROWS_AS(XPolyQ::monomial(-1, Rational(1)), UsageError);

  XPolyQ x = XPolyQ::var();
  CHECK(x.degree() == 1);
  CHECK(x.coeff(1) == Rational(1));

  // Trailing zeros are trimmed by the vector constructor.
  XPolyQ t(std::vector<Rational>{Rational(1), Rational(2), Rational(0), Rational(0)});
  CHECK(t.degree() == 1);

  t.set_coeff(3, Rational(7));
  CHECK(t.degree() == 3);
  t.set_coeff(3, Rational(0));
  CHECK(t.degree() == 1);
  CHECK_THROWS_AS(t.set_coeff(-1, Rational(1)), UsageError);
}

TEST_CASE("arithmetic golden values") {
  XPolyQ x = XPolyQ::var();
  XPolyQ p = x * x - XPolyQ::constant(Rational(1));        // x^2 - 1
  XPolyQ q = x + XPolyQ::constant(Rational(1));            // x + 1
  XPolyQ prod = p * q;                                     // x^3 + x^2 - x - 1
  CHECK(prod.coeff(3) == Rational(1));
  CHECK(prod.coeff(2) == Rational(1));
  CHECK(prod.coeff(1) == Rational(-1));
  CHECK(prod.coeff(0) == Rational(-1));
  CHECK((p - p).is_zero());
  CHECK((-p) + p == XPolyQ());
  CHECK(p.scaled(Rational(2)) == p + p);
  CHECK(p.scaled_q(Rational(0)).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(77001u);
  for (int i = 0; i < 1000; ++i) {
    XPolyQ a = testutil::random_poly_q(rng, 8);
    XPolyQ b = testutil::random_poly_q(rng, 8);
    XPolyQ c = testutil::random_poly_q(rng, 8);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * XPolyQ::constant(Rational(1)) == a);
    CHECK((a * XPolyQ()).is_zero());
  }
}

TEST_CASE("ring axioms in the lambda-coefficient ring") {
  std::mt19937_64 rng(77002u);
  for (int i = 0; i < 200; ++i) {
    XPolyL a = testutil::random_poly_l(rng, 5);
    XPolyL b = testutil::random_poly_l(rng, 5);
    XPolyL c = testutil::random_poly_l(rng, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("derivative and evaluation") {
  XPolyQ x = XPolyQ::var();
  XPolyQ p = x * x * x - x.scaled_q(Rational(2)) + XPolyQ::constant(Rational(5));
  CHECK(p.derivative() == x * x * XPolyQ::constant(Rational(3)) - XPolyQ::constant(Rational(2)));
  CHECK(p.derivative(2) == x.scaled_q(Rational(6)));
  CHECK(p.derivative(3) == XPolyQ::constant(Rational(6)));
  CHECK(p.derivative(4).is_zero());
  CHECK(p.derivative(0) == p);
  CHECK_THROWS_AS(p.derivative(-1), UsageError);
  CHECK(p.evaluate(Rational(2)) == Rational(9));
  CHECK(p.evaluate(Rational(-1, 2)) == Rational(47, 8));

  std::mt19937_64 rng(77003u);
  for (int i = 0; i < 100; ++i) {
    XPolyQ a = testutil::random_poly_q(rng, 8);
    XPolyQ b = testutil::random_poly_q(rng, 8);
    Rational v = testutil::random_rational(rng);
    CHECK((a * b).evaluate(v) == a.evaluate(v) * b.evaluate(v));
    CHECK((a + b).derivative() == a.derivative() + b.derivative());
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
  }
}

TEST_CASE("string rendering") {
  XPolyQ x = XPolyQ::var();
  CHECK(XPolyQ().str() == "0");
  CHECK(XPolyQ::constant(Rational(-1, 2)).str() == "-1/2");
  XPolyQ p = x * x * x + x.scaled_q(Rational(-2)) + XPolyQ::constant(Rational(5));
  CHECK(p.str() == "5 - 2*x + x^3");
  CHECK(p.str("t") == "5 - 2*t + t^3");
  XPolyL lam = lift_to_lambda(p);
  CHECK(lam.str() == "5 - 2*x + x^3");
}

TEST_CASE("lambda lifting and specialization") {
  std::mt19937_64 rng(77004u);
  for (int i = 0; i < 100; ++i) {
    XPolyQ p = testutil::random_poly_q(rng, 8);
    XPolyL lifted = lift_to_lambda(p);
    CHECK(specialize_lambda(lifted, Rational(3, 7)) == p);
    CHECK(specialize_lambda(lifted, Rational(0)) == p);
  }
  // Specialization is a ring homomorphism.
  for (int i = 0; i < 100; ++i) {
    XPolyL a = testutil::random_poly_l(rng, 5);
    XPolyL b = testutil::random_poly_l(rng, 5);
    Rational v = testutil::random_rational(rng);
    CHECK(specialize_lambda(a * b, v) == specialize_lambda(a, v) * specialize_lambda(b, v));
    CHECK(specialize_lambda(a + b, v) == specialize_lambda(a, v) + specialize_lambda(b, v));
  }
}

TEST_CASE("divide_lambda_pow is exact division") {
  LambdaPoly lam = LambdaPoly::var();
  LambdaPoly a = lam * lam * LambdaPoly::constant(Rational(3)) + lam * lam * lam;
  CHECK(divide_lambda_pow(a, lam, 2) ==
        LambdaPoly::constant(Rational(3)) + lam);
  CHECK(divide_lambda_pow(a, lam, 0) == a);
  CHECK(divide_lambda_pow(LambdaPoly(), lam, 5).is_zero());
  LambdaPoly b = lam + LambdaPoly::constant(Rational(1));
  CHECK_THROWS_AS(divide_lambda_pow(b, lam, 1), DivisibilityError);

  // Rational overload: plain division by lambda^k; lambda = 0 is a usage error.
  CHECK(divide_lambda_pow(Rational(3, 2), Rational(1, 2), 2) == Rational(6));
  CHECK_THROWS_AS(divide_lambda_pow(Rational(1), Rational(0), 1), UsageError);
}

TEST_CASE("nested ring traits") {
  using traits = ring_traits<LambdaPoly>;
  CHECK(traits::is_zero(traits::zero()));
  CHECK(traits::str(LambdaPoly::var()) == "λ");
  LambdaPoly inv;
  CHECK(traits::try_invert(LambdaPoly::constant(Rational(2)), inv));
  CHECK(inv == LambdaPoly::constant(Rational(1, 2)));
  CHECK(!traits::try_invert(LambdaPoly::var(), inv));
  CHECK(!traits::try_invert(LambdaPoly(), inv));
  CHECK(traits::from_rational(Rational(5, 2)) == LambdaPoly::constant(Rational(5, 2)));
}
