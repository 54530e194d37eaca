#include "doctest.h"
#include "klk/gray.hpp"
#include "klk/linalg.hpp"
#include "oracles.hpp"

using namespace klk;

namespace {

GradedPoly s() { return GradedPoly::s(); }
GradedPoly t() { return GradedPoly::t(); }
GradedPoly c(long v) { return GradedPoly::constant(Rational(v)); }

}  // namespace

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  for (long k = 0; k < 12; ++k) {
    Rational conv = 0;
    for (long i = 0; i <= k; ++i) conv += catalan(i) * catalan(k - i);
    CHECK(catalan(k + 1) == conv);
  }
}

TEST_CASE("g polynomials") {
  CHECK(g_poly(0) == c(1));
  CHECK(g_poly(1) == c(2) * t());
  CHECK(g_poly(2) == c(4) * t() * t() - c(2) * s());
  for (int k = 0; k <= 8; ++k) CHECK(c(2) * s() * g_poly(k) - c(2) * t() * g_poly(k + 1) + g_poly(k + 2) == GradedPoly());
  // (1 - 2 t x + 2 s x^2)^{-1} = sum_m (2 t x - 2 s x^2)^m
  const int K = 10;
  std::vector<GradedPoly> coeff(K + 1), u_pow(K + 1);
  std::vector<GradedPoly> u(K + 1);
  u[1] = c(2) * t();
  u[2] = c(-2) * s();
  std::vector<GradedPoly> pw(K + 1);
  pw[0] = c(1);
  for (int m = 0; m <= K; ++m) {
    for (int k = 0; k <= K; ++k) coeff[k] += pw[k];
    std::vector<GradedPoly> next(K + 1);
    for (int i = 0; i <= K; ++i)
      for (int j = 1; j <= 2 && i + j <= K; ++j) next[i + j] += pw[i] * u[j];
    pw = next;
  }
  for (int k = 0; k <= K; ++k) CHECK(g_poly(k) == coeff[k]);
}

TEST_CASE("c coefficients") {
  CHECK(c_coeff(0, 0, 0) == 1);
  CHECK(c_coeff(2, 1, 1) == 2);
  CHECK(c_coeff(2, 1, 0) == -1);
  Rational s0 = 0, s1 = 0;
  for (int p = 0; p <= 1; ++p) {
    s0 += c_coeff(2, p, 0);
    s1 += c_coeff(2, p, 1);
  }
  CHECK(s0 == 3);
  CHECK(s1 == 0);
  const int K = 9;
  auto G = oracle::catalan_generating_function(K);
  for (int k = 0; k <= K; ++k)
    for (int p = 0; 2 * p <= k; ++p)
      for (int j = 0; 2 * j <= k; ++j) {
        auto it = G.find({j, p, k});
        Rational expect = it == G.end() ? Rational(0) : it->second;
        CAPTURE(k);
        CAPTURE(p);
        CAPTURE(j);
        CHECK(c_coeff(k, p, j) == expect);
      }
}

TEST_CASE("phi polynomials") {
  CHECK(phi_poly(0, 0) == c(1));
  CHECK(phi_poly(2, 1) == c(2) * s() - t() * t());
  CHECK(phi_poly(2, 0) == c(-2) * s() + c(4) * t() * t());
}

TEST_CASE("gray normal forms") {
  CHECK(gray_normal_form(1, s()).poly == c(2) * t() * t());
  CHECK(gray_normal_form(1, t().pow(3)).is_zero());
  CHECK(gray_normal_form(3, c(1)).poly == c(1));
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p <= 2 * n + 2; ++p) CHECK(gray_quotient(n).dim(p) == gray_dim(n, p));
  CHECK(gray_dim(3, 3) == 2);
  CHECK(gray_dim(3, 7) == 0);
}

TEST_CASE("gray pairing values") {
  CHECK(gray_pairing(2, t() * t(), t() * t()) == 1);
  CHECK(gray_pairing(2, s(), t() * t()) == 1);
  CHECK(gray_pairing(2, s(), s()) == 2);
  CHECK(gray_pairing_concrete(2, s(), t() * t()) == 1);
  CHECK(gray_pairing_concrete(2, s(), s()) == 2);
  CHECK(determinant({{1, 1}, {1, 2}}) == 1);
}

TEST_CASE("realization") {
  CHECK(realize(2, t()).form == canonical_form(2, CanonicalKind::g));
  auto g1 = canonical_form(1, CanonicalKind::g);
  CHECK(realize(1, s()).form == Rational(2) * wedge(g1, g1));
  for (int n = 1; n <= 3; ++n) CHECK(realize(n, g_poly(n + 1)).form.is_zero());
  CHECK(realize(1, t().pow(3)).degree_overflow);
}

TEST_CASE("alternating catalan sums") {
  CHECK(catalan_alternating_sum(2, 1) == -1);
  CHECK(catalan_alternating_sum(5, 2) == 0);
  CHECK(catalan_alternating_sum(3, 3) == 1);
}
