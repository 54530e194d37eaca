#include <fstream>
#include <sstream>

#include "doctest.h"
#include "klk/curvature.hpp"
#include "klk/errors.hpp"
#include "klk/random.hpp"

using namespace klk;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Scalar lam_over_pi(const Rational& c) { return Scalar::monomial(c, -1, 1); }

}  // namespace

TEST_CASE("curvature measure bases") {
  auto b = curv_basis(2);
  CHECK(b.delta == std::vector<Index>{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {3, 1}, {4, 2}});
  CHECK(b.N == std::vector<Index>{{1, 0}});
  CHECK(curv_dim(2, 1) == 2);
  CHECK(curv_basis(1).N.empty());
  CHECK_FALSE(valid_N_index(1, 1, 0));
  for (int n = 1; n <= 4; ++n) {
    int total = 0;
    for (int k = 0; k <= 2 * n; ++k) total += curv_dim(n, k);
    CHECK(total == static_cast<int>(curv_basis(n).all().size()));
  }
}

TEST_CASE("flat globalization") {
  CHECK(glob_flat(curv_delta(2, 2, 1)) == mu_element(2, 2, 1));
  CHECK(glob_flat(curv_N(2, 1, 0)).is_zero());
  CHECK(glob_flat(curv_delta(2, 1, 0) + Scalar(3L) * curv_N(2, 1, 0)) == mu_element(2, 1, 0));
}

TEST_CASE("curved globalization") {
  for (int n = 1; n <= 3; ++n) {
    CurvedValuation expect = mu_lambda_element(n, 0, 0) - lam_over_pi(1) * mu_lambda_element(n, 2, 1);
    CHECK(glob_curved(curv_delta(n, 0, 0)) == expect);
  }
  CHECK(glob_curved(curv_B(2, 1, 0)) == mu_lambda_element(2, 1, 0));
  for (int n = 2; n <= 3; ++n)
    for (const auto& [k, q] : curv_basis(n).N)
      CHECK(glob_curved(curv_N(n, k, q)) == lam_over_pi(-(q + 1)) * mu_lambda_element(n, k + 2, q + 1));
}

TEST_CASE("R lambda examples") {
  for (int n = 1; n <= 3; ++n) {
    auto x = R_lambda_delta(n, 0, 0);
    CHECK(x.coeff({CurvKind::Delta, 0, 0}) == Scalar(1L));
    CHECK(x.coeff({CurvKind::Delta, 2, 1}) == lam_over_pi(2));
    if (n >= 2) CHECK(x.coeff({CurvKind::Delta, 2, 0}) == lam_over_pi(make_rational(1, 2)));
  }
  CHECK(R_lambda_N(2, 1, 0).coeff({CurvKind::N, 1, 0}) == Scalar(1L));
}

TEST_CASE("Lipschitz-Killing measures") {
  CHECK(lk_measure(2, 2) == curv_delta(2, 2, 0) + curv_delta(2, 2, 1));
  CHECK(lk_measure(2, 0) == curv_delta(2, 0, 0));
}

TEST_CASE("synthetic module table") {
  for (int n = 1; n <= 2; ++n) {
    auto table = synthetic_module_table(n);
    CHECK_NOTHROW(table.validate());
    Rng rng(40 + n);
    for (int s = 0; s < 5; ++s) {
      auto x = random_curv_element(rng, n);
      auto phi = random_flat_valuation(rng, n, FlatBasis::Mu);
      CHECK(module_multiply(flat_unit(n), x, table) == x);
      CHECK(glob_flat(module_multiply(phi, x, table)) == val_multiply(phi, glob_flat(x)));
    }
    // degree additivity on a homogeneous pair
    auto y = module_multiply(mu_element(n, 1, 0), curv_delta(n, 0, 0), table);
    for (const auto& [key, c] : y.coords) CHECK(key.k == 1);
  }
}

TEST_CASE("committed fixture matches the synthetic table") {
  std::string text = read_file(KLK_TEST_DATA_DIR "/module_fixture_n2.csv");
  CHECK(text == synthetic_module_table(2).to_csv());
  CHECK_NOTHROW(ModuleTable::from_csv(text).validate());
  CHECK_THROWS_AS(ModuleTable::load(KLK_TEST_DATA_DIR "/module_fixture_n2_corrupted.csv").validate(), ModuleUnavailableError);
}

TEST_CASE("malformed module tables") {
  CHECK_THROWS_AS(ModuleTable::from_csv(""), ModuleUnavailableError);
  CHECK_THROWS_AS(ModuleTable::from_csv("t,Delta,0,0,Delta,1,0,\"{\"\"terms\"\":[{\"\"pi\"\":0,\"\"lambda\"\":0,\"\"coeff\"\":\"\"1/1\"\"}]}\"\n"), ModuleUnavailableError);
  CHECK_THROWS_AS(ModuleTable::from_csv("# n=2\nt,Delta,0,0\n"), ModuleUnavailableError);
  CHECK_THROWS_AS(ModuleTable::from_csv("# n=2\nt,Delta,0,0,Delta,1,0,notjson\n"), ModuleUnavailableError);
  CHECK_THROWS_AS(ModuleTable::from_csv("# n=2\nt,Delta,9,0,Delta,1,0,\"{\"\"terms\"\":[{\"\"pi\"\":0,\"\"lambda\"\":0,\"\"coeff\"\":\"\"1/1\"\"}]}\"\n"), ModuleUnavailableError);
  CHECK_THROWS_AS(ModuleTable::load("/nonexistent/table.csv"), ModuleUnavailableError);
}

TEST_CASE("semi-local coproduct counit") {
  auto table = synthetic_module_table(1);
  for (const auto& key : curv_basis(1).all()) {
    CurvElement x{1, {}};
    x.add(key, Scalar(1L));
    auto kb = semi_local_kbar(x, table);
    CurvElement counit{1, {}};
    for (const auto& [k2, c] : kb.coords)
      if (k2.second == Index{2, 1}) counit.add(k2.first, c);
    CHECK(counit == x);
  }
}
