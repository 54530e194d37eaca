#include "doctest.h"
#include "klk/expr.hpp"
#include "klk/random.hpp"
#include "klk/space_forms.hpp"

using namespace klk;

namespace {

Scalar lam_over_pi(const Rational& c) { return Scalar::monomial(c, -1, 1); }

ScalarPoly S() { return ScalarPoly::s(); }
ScalarPoly T() { return ScalarPoly::t(); }
ScalarPoly C(const Scalar& c) { return ScalarPoly::constant(c); }

}  // namespace

TEST_CASE("r applied to mu") {
  for (int n = 1; n <= 3; ++n) {
    auto y = expand_r_mu(n, 0, 0);
    CHECK(y.coeff({0, 0}) == Scalar(1L));
    CHECK(y.coeff({2, 1}) == lam_over_pi(1));
  }
  for (int n = 1; n <= 4; ++n)
    for (const auto& [l, p] : mu_indices(n)) CHECK(expand_r_mu(n, l, p).coeff({l, p}) == Scalar(1L));
}

TEST_CASE("r applied to tau") {
  auto y = expand_r_tau(3, 1, 0);
  CHECK(y.basis == CurvedBasis::TauLambda);
  CHECK(y.coeff({1, 0}) == Scalar(1L));
  CHECK(y.coeff({3, 0}) == lam_over_pi(make_rational(3, 2)));
  CHECK(y.coeff({3, 1}) == lam_over_pi(make_rational(1, 2)));
}

TEST_CASE("r is an algebra map") {
  for (int n = 1; n <= 3; ++n) {
    auto t = flat_monomial(n, 0, 1, FlatBasis::Mu);
    CHECK(curved_multiply(r_apply(t), r_apply(t)) == r_apply(val_multiply(t, t)));
    CHECK(r_apply(flat_unit(n)) == curved_unit(n) + (r_apply(flat_unit(n)) - curved_unit(n)));
    Rng rng(n);
    auto x = random_curved_valuation(rng, n, CurvedBasis::MuLambda);
    CHECK(curved_multiply(curved_unit(n), x) == x);
    for (const auto& [k, p] : mu_indices(n)) {
      auto img = r_apply(mu_element(n, k, p));
      CurvedValuation at0{n, CurvedBasis::MuLambda, {}};
      for (const auto& [i, c] : img.coords) at0.add(i, c.at_lambda_zero());
      CHECK(at0 == mu_lambda_element(n, k, p));
    }
  }
}

TEST_CASE("curved s in complex dimension two") {
  CHECK(sigma_lambda(2) == parse_expression("s + lambda*s^2"));
  CHECK(curved_monomial_flat(2, 1, 0) == val_normal_form(2, parse_expression("s - lambda*s^2")));
}

TEST_CASE("tau lambda in curved monomials") {
  // (pi/2)(1 - lambda s)(4 s - t^2 (1 - lambda s))
  ScalarPoly expect = parse_expression("1/2*pi*(1 - lambda*s)*(4*s - t^2*(1 - lambda*s))");
  for (int n = 1; n <= 3; ++n)
    CHECK(curved_poly_to_muLambda(n, tauLambda_in_curved_monomials(n, 2, 1)) == curved_poly_to_muLambda(n, expect));
}

TEST_CASE("J lambda") {
  for (int n = 1; n <= 3; ++n) {
    auto rhs = r_apply(val_normal_form(n, lambda_s_power(1, Rational(-(n + 1)), 2 * n)));
    CHECK(J_lambda(flat_unit(n)) == rhs);
  }
  CHECK(j_binomial_lhs(1, 0, 0) == 0);
  CHECK(j_binomial_rhs(1, 0, 0) == 0);
  CHECK(grid_binomial(-1, 0) == 1);
  CHECK(grid_binomial(-1, 1) == 0);
  CHECK(grid_binomial(2, 3) == 0);
}

TEST_CASE("kinematic operator on curved valuations") {
  const int n = 1;
  FlatValuation f = val_normal_form(n, lambda_s_power(1, Rational(-(n + 1)), 2 * n));
  std::vector<FlatValuation> phis = {flat_unit(n), flat_monomial(n, 0, 1, FlatBasis::Mu), flat_monomial(n, 1, 0, FlatBasis::Mu)};
  for (const auto& phi : phis) CHECK(k_lambda(r_apply(phi)) == r_tensor(kinematic_k0(n, val_multiply(phi, f))));
}

TEST_CASE("O operator") {
  PowerSeries2 one = PowerSeries2::constant(1, 4);
  CHECK(O_operator(one) == one);
  PowerSeries2 xe(4);
  xe.add(1, 1, 1);
  PowerSeries2 half(4);
  half.add(1, 1, make_rational(1, 2));
  CHECK(O_operator(xe) == half);
  const int order = 6;
  PowerSeries2 lhs = O_operator(r_tau_series(2, 0, order));
  PowerSeries2 rhs = series_expand({{make_rational(1, 4), make_rational(1, 4), Rational(-2)}}, 1, 0, order);
  rhs *= make_rational(1, 2);
  CHECK(lhs == rhs);
}
