#include "doctest.h"
#include "klk/random.hpp"
#include "klk/weyl.hpp"

using namespace klk;

TEST_CASE("ball and sphere volumes") {
  CHECK(ball_volume(0) == Scalar(1L));
  CHECK(ball_volume(2) == Scalar::pi());
  CHECK(ball_volume(3) == Scalar::monomial(make_rational(4, 3), 1, 0));
  CHECK(sphere_volume(1) == Scalar::monomial(2, 1, 0));
  CHECK(sphere_volume(3) == Scalar::monomial(2, 2, 0));
  for (long n = 1; n <= 6; ++n) CHECK(ball_volume(2 * n) == Scalar::monomial(Rational(1) / Rational(factorial(n)), n, 0));
}

TEST_CASE("d constants") {
  CHECK(d_constant(2, 0, 0) == Scalar::monomial(make_rational(1, 2), -1, 0));
  CHECK(d_constant(make_rational(5, 2), 0, 0).is_zero());
  CHECK(d_constant(Rational(4), make_rational(1, 2), Rational(0)).is_zero());
  CHECK(d_constant(3, 2, 1).is_zero());
  for (long n = 0; n <= 6; ++n)
    for (long k = 0; k <= n; ++k) {
      Scalar expect = Scalar(1L) / (Scalar(Rational(factorial(k + 1) * factorial(n - k))) * ball_volume(n - k));
      CHECK(d_constant(n, k, 0) == expect);
    }
}

TEST_CASE("sphere moments") {
  CHECK(sphere_moment({2, 0}) == Scalar::pi());
  CHECK(sphere_moment({0, 0, 0, 0}) == Scalar::monomial(2, 2, 0));
  CHECK(sphere_moment({1, 2}).is_zero());
  CHECK(sphere_moment({2, 2, 0, 0}) == sphere_moment({0, 2, 2, 0}));
}

TEST_CASE("cos sin integrals") {
  CHECK(cos_sin_integral(0, 0) == Scalar::monomial(make_rational(1, 2), 1, 0));
  CHECK(cos_sin_integral(1, 0) == Scalar(1L));
  CHECK(cos_sin_integral(2, 0) == Scalar::monomial(make_rational(1, 4), 1, 0));
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b) CHECK(cos_sin_integral(a, b) == cos_sin_integral(b, a));
}

TEST_CASE("Weyl lemma instances") {
  Rng rng(31);
  auto sffs = random_sffs(rng, 1, 1);
  auto w0 = weyl_integral_check(1, 0, sffs);
  CHECK(w0.equal);
  auto w1 = weyl_integral_check(1, 1, sffs);
  CHECK(w1.equal);
  CHECK_FALSE(w1.lhs.is_zero());
  CHECK(weyl_integral(1, 1, sffs).is_zero());
  CHECK(weyl_integral(1, 3, sffs).is_zero());
}
