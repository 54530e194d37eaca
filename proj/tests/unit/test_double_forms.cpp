#include "doctest.h"
#include "klk/double_form.hpp"
#include "klk/errors.hpp"
#include "klk/kahler.hpp"
#include "klk/random.hpp"
#include "oracles.hpp"

using namespace klk;

namespace {

DoubleForm elementary(int n, std::vector<int> I, std::vector<int> J) {
  DoubleForm f(n, static_cast<int>(I.size()), static_cast<int>(J.size()));
  f.set(I, J, 1);
  return f;
}

}  // namespace

TEST_CASE("canonical forms on basis vectors") {
  auto g1 = canonical_form(1, CanonicalKind::g);
  CHECK(g1.get({1}, {1}) == 1);
  CHECK(g1.get({1}, {2}) == 0);
  CHECK(canonical_form(1, CanonicalKind::G).get({1, 2}, {1, 2}) == 4);
  CHECK(canonical_form(2, CanonicalKind::G).get({1, 3}, {1, 3}) == 1);
  CHECK(canonical_form(1, CanonicalKind::F).get({1, 2}, {}) == 1);
  CHECK(wedge(g1, g1).get({1, 2}, {1, 2}) == 2);
  for (int n = 1; n <= 3; ++n) {
    auto gt = wedge_power(canonical_form(n, CanonicalKind::g), 2 * n);
    std::vector<int> all;
    for (int a = 1; a <= 2 * n; ++a) all.push_back(a);
    CHECK(gt.get(all, all) == Rational(factorial(2 * n)));
    CHECK(top_coefficient(gt) == 1);
  }
  CHECK(top_coefficient(canonical_form(1, CanonicalKind::G)) == 2);
  CHECK(top_coefficient(DoubleForm(1, 2, 2)) == 0);
}

TEST_CASE("wedge matches the permutation oracle") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2;
    int pa = static_cast<int>(rng.integer(0, 2)), qa = static_cast<int>(rng.integer(0, 2));
    int pb = static_cast<int>(rng.integer(0, 4 - pa)), qb = static_cast<int>(rng.integer(0, 4 - qa));
    auto a = random_double_form(rng, n, pa, qa), b = random_double_form(rng, n, pb, qb);
    CAPTURE(trial);
    CHECK(wedge(a, b) == oracle::wedge(a, b));
  }
}

TEST_CASE("wedge sign law") {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    int n = static_cast<int>(rng.integer(1, 3));
    int pa = static_cast<int>(rng.integer(0, 3)), qa = static_cast<int>(rng.integer(0, 3));
    int pb = static_cast<int>(rng.integer(0, 3)), qb = static_cast<int>(rng.integer(0, 3));
    if (pa + pb > 2 * n || qa + qb > 2 * n) continue;
    auto a = random_double_form(rng, n, pa, qa), b = random_double_form(rng, n, pb, qb);
    int sign = (pa * pb + qa * qb) % 2 ? -1 : 1;
    CHECK(wedge(a, b) == Rational(sign) * wedge(b, a));
  }
}

TEST_CASE("contraction") {
  for (int n = 1; n <= 3; ++n) CHECK(contract(canonical_form(n, CanonicalKind::g)) == Rational(2 * n) * DoubleForm::one(n));
  CHECK(contract(contract(canonical_form(1, CanonicalKind::G))).get(0, 0) == 8);
  CHECK_THROWS_AS(contract(canonical_form(1, CanonicalKind::F)), DegreeError);
}

TEST_CASE("contraction matches the trace definition") {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    int n = static_cast<int>(rng.integer(1, 2));
    int p = static_cast<int>(rng.integer(1, 2 * n)), q = static_cast<int>(rng.integer(1, 2 * n));
    auto w = random_double_form(rng, n, p, q);
    CHECK(contract(w) == oracle::contract(w));
  }
}

TEST_CASE("iterated contraction against powers of g") {
  // ((2n - p)!/p!) C^p(w) = (w ^ g^{2n-p})(e_1..e_2n; e_1..e_2n) for type (p, p)
  Rng rng(10);
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p <= 2 * n; ++p) {
      auto w = random_double_form(rng, n, p, p);
      DoubleForm c = w;
      for (int i = 0; i < p; ++i) c = contract(c);
      std::vector<int> all;
      for (int a = 1; a <= 2 * n; ++a) all.push_back(a);
      auto top = wedge(w, wedge_power(canonical_form(n, CanonicalKind::g), 2 * n - p));
      CHECK(Rational(factorial(2 * n - p)) / Rational(factorial(p)) * c.get(0, 0) == top.get(all, all));
    }
}

TEST_CASE("prime and vee") {
  CHECK(prime(canonical_form(2, CanonicalKind::g)).is_zero());
  CHECK(prime(elementary(1, {1}, {2})).get({1, 2}, {}) == -1);
  CHECK(vee(elementary(2, {1}, {2})) == elementary(2, {2}, {1}));
  CHECK(vee(canonical_form(3, CanonicalKind::g)) == canonical_form(3, CanonicalKind::g));
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    auto R = random_kahler_tensor(rng, 2).form();
    CHECK(prime(R).is_zero());
    CHECK(vee(R) == R);
    CHECK(j_rotate(R).is_zero());
  }
}

TEST_CASE("J derivation") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(j_rotate(canonical_form(n, CanonicalKind::g)) == canonical_form(n, CanonicalKind::Jg));
    CHECK(j_rotate(canonical_form(n, CanonicalKind::G)).is_zero());
  }
  // derivation rule on products
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_double_form(rng, 2, 1, 1), b = random_double_form(rng, 2, 1, 2);
    CHECK(j_rotate(wedge(a, b)) == wedge(j_rotate(a), b) + wedge(a, j_rotate(b)));
  }
}

TEST_CASE("Gray form from the basic forms") {
  for (int n = 1; n <= 3; ++n) {
    auto g = canonical_form(n, CanonicalKind::g), Jg = canonical_form(n, CanonicalKind::Jg);
    auto F = canonical_form(n, CanonicalKind::F), Fv = canonical_form(n, CanonicalKind::Fvee);
    DoubleForm rhs = make_rational(1, 2) * (wedge(g, g) + wedge(Jg, Jg) + Rational(4) * wedge(F, Fv));
    CHECK(canonical_form(n, CanonicalKind::G) == rhs);
  }
  // n = 1: G = 2 g^2
  auto g = canonical_form(1, CanonicalKind::g);
  CHECK(canonical_form(1, CanonicalKind::G) == Rational(2) * wedge(g, g));
}

TEST_CASE("evaluation on arbitrary vectors") {
  auto g = canonical_form(2, CanonicalKind::g);
  Vec x = {1, 2, 0, 0}, y = {3, 1, 0, 5};
  CHECK(g.evaluate({x}, {y}) == 5);
  CHECK(g.on_basis({2}, {2}) == 1);
  CHECK_THROWS_AS(g.evaluate({x, y}, {y}), ArityError);
}

TEST_CASE("Gauss equation example") {
  RMatrix A = {{1}}, B = {{0}};
  auto [re, im] = complex_sff(A, B);
  CHECK(re.matrix == RMatrix{{1, 0}, {0, -1}});
  CHECK(im.matrix == RMatrix{{0, 1}, {1, 0}});
  CHECK(check_sff_pair(re, im).empty());
  auto R = gauss_from_sff(1, {re, im});
  CHECK(R.form().get({1, 2}, {1, 2}) == -2);
  CHECK(gauss_from_sff(2, {}).form().is_zero());
  CHECK_THROWS_AS(gauss_from_sff(1, {re}), InvalidSffError);
}

TEST_CASE("random embedded tensors are Kaehler") {
  Rng rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    auto sffs = random_sffs(rng, 2, 2);
    auto R = gauss_from_sff(2, sffs);
    CHECK(KahlerTensor::check(R.form()).empty());
  }
  CHECK_THROWS_AS(KahlerTensor(canonical_form(2, CanonicalKind::Jg)), InvalidSffError);
}

TEST_CASE("embedded span dimensions") {
  CHECK(embedded_span_dim(1, 4, 0) == 1);
  CHECK(embedded_span_dim(2, 4, 0) == 9);
  CHECK(embedded_span_dim(3, 4, 0) == 36);
}

TEST_CASE("Chern forms") {
  auto G = canonical_form(1, CanonicalKind::G);
  for (long l0 : {1L, 3L}) {
    KahlerTensor R(Rational(l0) * G);
    auto c0 = chern_scaled(R, 0);
    CHECK(c0.scaled == DoubleForm::one(1));
    auto c1 = chern_scaled(R, 1);
    CHECK(c1.scaled.get({1, 2}, {}) == 4 * l0);
    CHECK(c1.equal);
  }
  Rng rng(21);
  auto R = random_kahler_tensor(rng, 2);
  for (int q = 0; q <= 2; ++q) CHECK(chern_scaled(R, q).equal);
}
