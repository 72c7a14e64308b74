#include "fubini/operators.hpp"

#include "fubini/error.hpp"
#include "fubini/families.hpp"
#include "helpers.hpp"

#include "doctest.h"

#include <random>

using namespace fubini;

TEST_CASE("shift golden values") {
  XPolyQ x = XPolyQ::var();
  XPolyQ b3 = bernoulli_poly(3);
  CHECK(shift_q(b3, Rational(1)) - b3 == x * x * XPolyQ::constant(Rational(3)));
  XPolyQ p = x * x;
  CHECK(shift_q(p, Rational(-1, 2)) ==
        x * x - x + XPolyQ::constant(Rational(1, 4)));
  CHECK(shift_q(XPolyQ::constant(Rational(5)), Rational(7)) == XPolyQ::constant(Rational(5)));
  CHECK(shift_q(p, Rational(0)) == p);
  // Shift by a λ-polynomial amount.
  XPolyL xl = XPolyL::var();
  XPolyL shifted = shift(xl * xl, LambdaPoly::var());
  CHECK(shifted.coeff(1) == LambdaPoly::monomial(1, Rational(2)));
  CHECK(shifted.coeff(0) == LambdaPoly::monomial(2, Rational(1)));
}

TEST_CASE("forward difference golden values") {
  XPolyQ x = XPolyQ::var();
  XPolyQ x3 = x * x * x;
  CHECK(forward_diff(x3, Rational(1), 1) ==
        x * x * XPolyQ::constant(Rational(3)) + x.scaled_q(Rational(3)) +
            XPolyQ::constant(Rational(1)));
  CHECK(forward_diff(x3, Rational(1), 0) == x3);
  CHECK_THROWS_AS(forward_diff(x3, Rational(1), -1), UsageError);

  // Δ_λ^2 x^3 = 6λ^2 x + 6λ^3 with λ symbolic.
  XPolyL xl3 = lift_to_lambda(x3);
  XPolyL d2 = forward_diff(xl3, LambdaPoly::var(), 2);
  CHECK(d2.degree() == 1);
  CHECK(d2.coeff(1) == LambdaPoly::monomial(2, Rational(6)));
  CHECK(d2.coeff(0) == LambdaPoly::monomial(3, Rational(6)));
}

TEST_CASE("difference commutes with shifts") {
  std::mt19937_64 rng(99001u);
  for (int i = 0; i < 100; ++i) {
    XPolyQ p = testutil::random_poly_q(rng, 8);
    Rational a = testutil::random_rational(rng);
    Rational c = testutil::random_rational(rng);
    CHECK(forward_diff(shift_q(p, c), a, 1) == shift_q(forward_diff(p, a, 1), c));
  }
}

TEST_CASE("scaled lambda difference") {
  XPolyQ x = XPolyQ::var();
  // (Δ_λ/λ) x^2 = 2x + λ.
  XPolyL d = scaled_lambda_diff(lift_to_lambda(x * x), LambdaPoly::var(), 1);
  CHECK(d.coeff(1) == LambdaPoly::constant(Rational(2)));
  CHECK(d.coeff(0) == LambdaPoly::monomial(1, Rational(1)));
  CHECK_THROWS_AS(scaled_lambda_diff(d, LambdaPoly::var(), -2), UsageError);

  std::mt19937_64 rng(99002u);
  for (int i = 0; i < 60; ++i) {
    XPolyQ p = testutil::random_poly_q(rng, 8);
    XPolyL lifted = lift_to_lambda(p);
    for (int k = 0; k <= 3; ++k) {
      XPolyL sym = scaled_lambda_diff(lifted, LambdaPoly::var(), k);
      // Specialization commutes with the operator.
      Rational q = testutil::random_nonzero_rational(rng);
      CHECK(specialize_lambda(sym, q) == scaled_lambda_diff(p, q, k));
      // λ -> 0 limit is the k-th derivative.
      CHECK(specialize_lambda(sym, Rational(0)) == p.derivative(k));
    }
  }
}

TEST_CASE("identity minus difference powers") {
  XPolyQ x = XPolyQ::var();
  for (int n = 0; n <= 10; ++n) {
    CHECK(identity_minus_delta_pow(ordered_bell_poly(n), 1) == XPolyQ::monomial(n, Rational(1)));
    CHECK(identity_minus_delta_pow(ordered_bell_poly(n, 2), 2) ==
          XPolyQ::monomial(n, Rational(1)));
    CHECK(identity_minus_delta_pow(ordered_bell_poly(n, 3), 3) ==
          XPolyQ::monomial(n, Rational(1)));
  }
  XPolyQ p = x * x * x - x;
  CHECK(identity_minus_delta_pow(p, 0) == p);
  CHECK_THROWS_AS(identity_minus_delta_pow(p, -1), UsageError);
  // Degenerate version lands on falling factorials.
  for (int n = 0; n <= 8; ++n) {
    CHECK(identity_minus_delta_pow(degenerate_ordered_bell_poly(n, 1), 1) ==
          falling_factorial_lambda(n));
    CHECK(identity_minus_delta_pow(degenerate_ordered_bell_poly(n, 2), 2) ==
          falling_factorial_lambda(n));
  }
}

TEST_CASE("apply_series acts as a differential operator") {
  std::mt19937_64 rng(99003u);
  for (int i = 0; i < 60; ++i) {
    XPolyQ p = testutil::random_poly_q(rng, 8);
    Rational y = testutil::random_rational(rng);
    int order = p.degree() < 0 ? 0 : p.degree();
    // e^{yt} acts as the shift by y; its functional evaluates at y.
    CHECK(apply_series(egf_exp(order, y), p) == shift_q(p, y));
    CHECK(functional(egf_exp(order, y), p) == p.evaluate(y));
  }
  XPolyQ x = XPolyQ::var();
  CHECK_THROWS_AS(apply_series(egf_exp(1, Rational(1)), x * x * x), UsageError);
}

TEST_CASE("the degenerate delta operator lowers the basis") {
  // f(t) = (e^{λt} - 1)/λ sends b^{(r)}_{n,λ} to n b^{(r)}_{n-1,λ}.
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 7; ++n) {
      XPolyL b = degenerate_ordered_bell_poly(n, r);
      EgfSeries<LambdaPoly> f = egf_f_lambda(n, LambdaPoly::var());
      CHECK(apply_series(f, b) == degenerate_ordered_bell_poly(n - 1, r).scaled_q(Rational(n)));
    }
  }
}

TEST_CASE("definite integrals") {
  XPolyQ x = XPolyQ::var();
  CHECK(definite_integral(x * x, Rational(1), Rational(3)) == Rational(26, 3));
  CHECK(definite_integral(XPolyQ::constant(Rational(1)), Rational(0), Rational(1)) ==
        Rational(1));
  for (int n = 1; n <= 10; ++n)
    CHECK(definite_integral(bernoulli_poly(n), Rational(0), Rational(1)) == Rational(0));
  // In the λ-coefficient ring: ∫_0^λ x dx = λ^2/2.
  CHECK(definite_integral(XPolyL::var(), LambdaPoly(), LambdaPoly::var()) ==
        LambdaPoly::monomial(2, Rational(1, 2)));
}

TEST_CASE("free derivative helper") {
  std::mt19937_64 rng(99004u);
  for (int i = 0; i < 40; ++i) {
    XPolyQ p = testutil::random_poly_q(rng, 8);
    CHECK(derivative(p) == p.derivative());
    CHECK(derivative(p, 3) == p.derivative(3));
  }
}
