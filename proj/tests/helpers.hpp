#ifndef FUBINI_TESTS_HELPERS_HPP
#define FUBINI_TESTS_HELPERS_HPP

#include "fubini/poly.hpp"

#include <random>
#include <utility>
#include <vector>

namespace testutil {

// Deterministic generators shared by the randomized suites. Every test fixes
// its own seed so failures reproduce exactly.

inline fubini::Rational random_rational(std::mt19937_64& rng, long num_range = 9,
                                        long den_range = 4) {
  std::uniform_int_distribution<long> num(-num_range, num_range);
  std::uniform_int_distribution<long> den(1, den_range);
  return fubini::Rational(num(rng), den(rng));
}

inline fubini::Rational random_nonzero_rational(std::mt19937_64& rng, long num_range = 9,
                                                long den_range = 4) {
  for (;;) {
    fubini::Rational r = random_rational(rng, num_range, den_range);
    if (!r.is_zero()) return r;
  }
}

inline fubini::XPolyQ random_poly_q(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  const int d = deg(rng);
  std::vector<fubini::Rational> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = random_rational(rng);
  return fubini::XPolyQ(std::move(c));
}

inline fubini::LambdaPoly random_lambda_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  const int d = deg(rng);
  std::vector<fubini::Rational> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = random_rational(rng, 5, 3);
  return fubini::LambdaPoly(std::move(c));
}

inline fubini::XPolyL random_poly_l(std::mt19937_64& rng, int max_degree,
                                    int lambda_degree = 2) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  const int d = deg(rng);
  std::vector<fubini::LambdaPoly> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = random_lambda_poly(rng, lambda_degree);
  return fubini::XPolyL(std::move(c));
}

}  // namespace testutil

#endif
