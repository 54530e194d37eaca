#include "doctest.h"
#include "klk/errors.hpp"
#include "klk/random.hpp"
#include "klk/valuations.hpp"
#include "klk/weyl.hpp"

using namespace klk;

namespace {

GradedPoly s() { return GradedPoly::s(); }
GradedPoly t() { return GradedPoly::t(); }
GradedPoly c(const Rational& v) { return GradedPoly::constant(v); }

}  // namespace

TEST_CASE("f polynomials from the logarithm") {
  // log(1 + t x + s x^2) = sum_m (-1)^{m+1} (t x + s x^2)^m / m
  const int K = 10;
  std::vector<GradedPoly> logc(K + 1), pw(K + 1);
  pw[0] = c(1);
  for (int m = 1; m <= K; ++m) {
    std::vector<GradedPoly> next(K + 1);
    for (int i = 0; i < K; ++i) {
      if (i + 1 <= K) next[i + 1] += pw[i] * t();
      if (i + 2 <= K) next[i + 2] += pw[i] * s();
    }
    pw = next;
    Rational w = Rational(m % 2 ? 1 : -1) / Rational(m);
    for (int k = 0; k <= K; ++k) logc[k] += w * pw[k];
  }
  CHECK(f_poly(1) == t());
  CHECK(f_poly(2) == s() - make_rational(1, 2) * t() * t());
  CHECK(f_poly(3) == make_rational(1, 3) * t().pow(3) - s() * t());
  for (int k = 1; k <= K; ++k) CHECK(f_poly(k) == logc[k]);
}

TEST_CASE("flat normal forms and products") {
  CHECK(val_normal_form(1, s()) == val_normal_form(1, make_rational(1, 2) * t() * t()));
  CHECK(val_normal_form(1, t().pow(3)).is_zero());
  CHECK(val_normal_form(2, s() * t()) == val_normal_form(2, make_rational(1, 3) * t().pow(3)));
  auto tt = flat_monomial(2, 0, 1);
  CHECK(val_multiply(tt, tt) == flat_monomial(2, 0, 2));
  CHECK(val_power(tt, 5).is_zero());
  CHECK(val_multiply(flat_monomial(1, 1, 0), flat_monomial(1, 1, 0)).is_zero());
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 2 * n; ++k) CHECK(val_dim(n, k) == static_cast<int>(mu_indices(n, k).size()));
  CHECK(val_dim(3, 3) == 2);
  CHECK(val_dim(3, 7) == 0);
}

TEST_CASE("tau and mu bases") {
  for (int n = 2; n <= 3; ++n) {
    CHECK(basis_convert(tau_element(n, 2, 0), FlatBasis::Mu) == mu_element(n, 2, 0) + mu_element(n, 2, 1));
    CHECK(basis_convert(tau_element(n, 2, 1), FlatBasis::Mu) == mu_element(n, 2, 1));
    CHECK(basis_convert(mu_element(n, 0, 0), FlatBasis::Monomial) == flat_monomial(n, 0, 0));
  }
  // tau_{2,1} = (pi/2)(4s - t^2)
  FlatValuation expect{2, FlatBasis::Monomial, {}};
  expect.add({1, 0}, Scalar::monomial(2, 1, 0));
  expect.add({0, 2}, Scalar::monomial(make_rational(-1, 2), 1, 0));
  CHECK(basis_convert(tau_element(2, 2, 1), FlatBasis::Monomial) == expect);
}

TEST_CASE("basis conversions round trip") {
  Rng rng(4);
  const FlatBasis all[] = {FlatBasis::Monomial, FlatBasis::Mu, FlatBasis::Tau};
  for (int n = 1; n <= 3; ++n)
    for (FlatBasis a : all)
      for (FlatBasis b : all) {
        auto x = random_flat_valuation(rng, n, a);
        CHECK(basis_convert(basis_convert(x, b), a) == x);
      }
}

TEST_CASE("Poincare pairing") {
  CHECK(pd(flat_unit(1), mu_element(1, 2, 1)) == Scalar(1L));
  auto t1 = flat_monomial(1, 0, 1);
  CHECK(pd(t1, t1) == Scalar::monomial(2, -1, 0));
  CHECK(pd(flat_monomial(1, 0, 2), flat_unit(1)) == Scalar::monomial(2, -1, 0));
  CHECK(val_counit(mu_element(2, 4, 2)) == Scalar(1L));
  CHECK(val_counit(mu_element(2, 2, 1)).is_zero());
}

TEST_CASE("kinematic coproduct in complex dimension one") {
  ValTensor expect{1, "mu", "mu", {}};
  expect.add({0, 0}, {2, 1}, Scalar(1L));
  expect.add({2, 1}, {0, 0}, Scalar(1L));
  expect.add({1, 0}, {1, 0}, Scalar::monomial(2, -1, 0));
  CHECK(kinematic_k0(1, flat_unit(1)) == expect);
}

TEST_CASE("kinematic coproduct is adjoint to the product") {
  // <k0(x), mu_b (x) mu_d> = <x, mu_b mu_d>
  for (int n = 1; n <= 2; ++n)
    for (const auto& i : mu_indices(n)) {
      auto x = mu_element(n, i.first, i.second);
      auto k = kinematic_k0(n, x);
      for (const auto& b : mu_indices(n))
        for (const auto& d : mu_indices(n)) {
          Scalar lhs;
          for (const auto& [key, v] : k.coords)
            lhs += v * pd(mu_element(n, key.first.first, key.first.second), mu_element(n, b.first, b.second)) *
                   pd(mu_element(n, key.second.first, key.second.second), mu_element(n, d.first, d.second));
          Scalar rhs = pd(x, val_multiply(mu_element(n, b.first, b.second), mu_element(n, d.first, d.second)));
          CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("invalid indices") {
  CHECK_FALSE(valid_mu_index(2, 3, 0));
  CHECK(valid_mu_index(2, 3, 1));
  CHECK_THROWS(mu_element(2, 3, 0));
}
