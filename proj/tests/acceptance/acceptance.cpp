// Acceptance run: one PASS/FAIL/SKIP line per criterion.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "klk/curvature.hpp"
#include "klk/double_form.hpp"
#include "klk/errors.hpp"
#include "klk/gray.hpp"
#include "klk/linalg.hpp"
#include "klk/random.hpp"
#include "klk/serialize.hpp"
#include "klk/valuations.hpp"
#include "klk/verify.hpp"
#include "oracles.hpp"

using namespace klk;

namespace {

struct Outcome {
  std::string status;  // PASS, FAIL or SKIP
  std::string detail;
};

std::map<std::string, CheckRecord> g_checks;

// Bounds per suite: 20 tensors per n, 25 sff draws, n up to 4 where stated.
const std::map<std::string, VerifyBounds> kBounds = {
    {"gray", {4, 0, 20}},     {"weyl", {2, 0, 25}}, {"unitary", {4, 0, 10}},
    {"transfer", {3, 0, 10}}, {"glob", {3, 0, 20}}, {"kinematic", {2, 0, 5}},
};

// Runs the suite owning `id` the first time one of its checks is needed.
void ensure_loaded(const std::string& id) {
  static std::map<std::string, bool> loaded;
  std::string suite = id.substr(0, id.find('.'));
  if (loaded[suite]) return;
  loaded[suite] = true;
  for (auto& c : run_suite(suite, kBounds.at(suite)).checks) g_checks[c.id] = c;
}

// Every listed check must pass; a missing id is a failure.
Outcome from_checks(const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    ensure_loaded(id);
    auto it = g_checks.find(id);
    if (it == g_checks.end()) return {"FAIL", id + " did not run"};
    if (it->second.status == CheckStatus::Skip) return {"SKIP", it->second.witness};
    if (it->second.status == CheckStatus::Fail) return {"FAIL", id + ": " + it->second.witness};
  }
  return {"PASS", ""};
}

Outcome both(Outcome a, const std::function<Outcome()>& more) {
  if (a.status != "PASS") return a;
  return more();
}

// Pairing <s^p, t^{2(n-p)}> from forms multiplied by the permutation oracle.
Outcome brute_force_catalan() {
  for (int n = 1; n <= 3; ++n) {
    DoubleForm g = canonical_form(n, CanonicalKind::g), G = canonical_form(n, CanonicalKind::G);
    std::vector<int> all;
    for (int a = 1; a <= 2 * n; ++a) all.push_back(a);
    for (int p = 0; p <= n; ++p) {
      DoubleForm Gp = oracle::wedge_power(G, p), gk = oracle::wedge_power(g, 2 * (n - p));
      DoubleForm gn = oracle::wedge_power(g, 2 * n);
      Rational top = oracle::wedge_value(Gp, gk, all, all);
      Rational unit = gn.get(all, all);
      Rational expect = power(Rational(2), p) * catalan(n - p) / catalan(n);
      if (top / unit != expect)
        return {"FAIL", "brute force n=" + std::to_string(n) + " p=" + std::to_string(p) + " got " + to_string(top / unit)};
    }
  }
  return {"PASS", ""};
}

Outcome gram_invertible() {
  for (int n = 1; n <= 3; ++n) {
    const auto& P = pd_pairing(n);
    for (std::size_t i = 0; i < P.basis.size(); ++i)
      for (std::size_t j = 0; j < P.basis.size(); ++j) {
        Scalar acc;
        for (std::size_t k = 0; k < P.basis.size(); ++k) acc += P.gram[i][k] * P.inverse[k][j];
        if (acc != Scalar(i == j ? 1L : 0L)) return {"FAIL", "Gram * inverse != 1 for n=" + std::to_string(n)};
      }
  }
  return {"PASS", ""};
}

template <class T, class Gen, class Parse>
std::string round_trip(const char* name, int count, Gen gen, Parse parse) {
  for (int i = 0; i < count; ++i) {
    T x = gen(i);
    std::string a = to_json(x);
    T y = parse(a);
    std::string b = to_json(y);
    if (a != b || !(x == y)) return std::string(name) + " #" + std::to_string(i) + ": " + a + " vs " + b;
  }
  return "";
}

Outcome serialization() {
  Rng rng(2024);
  const int N = 100;
  std::vector<std::string> errs;
  errs.push_back(round_trip<Scalar>("scalar", N, [&](int) { return random_scalar(rng); }, scalar_from_json));
  errs.push_back(round_trip<DoubleForm>(
      "double_form", N,
      [&](int) {
        int n = static_cast<int>(rng.integer(1, 3));
        return random_double_form(rng, n, static_cast<int>(rng.integer(0, 2 * n)), static_cast<int>(rng.integer(0, 2 * n)));
      },
      double_form_from_json));
  errs.push_back(round_trip<GradedPoly>("graded_poly", N, [&](int) { return random_graded_poly(rng, 8); }, graded_poly_from_json));
  errs.push_back(round_trip<FlatValuation>(
      "flat_valuation", N,
      [&](int i) {
        const FlatBasis bases[] = {FlatBasis::Monomial, FlatBasis::Mu, FlatBasis::Tau};
        return random_flat_valuation(rng, static_cast<int>(rng.integer(1, 4)), bases[i % 3]);
      },
      flat_valuation_from_json));
  errs.push_back(round_trip<CurvedValuation>(
      "curved_valuation", N,
      [&](int i) {
        return random_curved_valuation(rng, static_cast<int>(rng.integer(1, 3)),
                                       i % 2 ? CurvedBasis::MuLambda : CurvedBasis::TauLambda);
      },
      curved_valuation_from_json));
  errs.push_back(round_trip<CurvElement>(
      "curv_element", N, [&](int) { return random_curv_element(rng, static_cast<int>(rng.integer(1, 3))); },
      curv_element_from_json));
  for (int i = 0; i < N && errs.back().empty(); ++i) {
    std::size_t r = rng.integer(1, 4), c = rng.integer(1, 4);
    RMatrix m = zero_matrix(r, c);
    for (auto& row : m)
      for (auto& v : row) v = rng.rational();
    std::string a = matrix_to_csv(m);
    if (matrix_to_csv(matrix_from_csv(a)) != a || matrix_from_csv(a) != m) errs.push_back("matrix csv #" + std::to_string(i));
  }
  for (int n = 1; n <= 2; ++n) {
    std::string a = synthetic_module_table(n).to_csv();
    if (ModuleTable::from_csv(a).to_csv() != a) errs.push_back("module table n=" + std::to_string(n));
  }
  for (const auto& e : errs)
    if (!e.empty()) return {"FAIL", e};
  return {"PASS", ""};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const char* table_env = std::getenv("KLK_MODULE_TABLE");
  std::vector<Criterion> criteria = {
      {1, "gray relations vanish", [] { return from_checks({"gray.relations_vanish"}); }},
      {2, "graded dimensions", [] { return from_checks({"gray.dimensions"}); }},
      {3, "catalan pairing and hankel determinants",
       [] { return both(from_checks({"gray.catalan_pairing", "gray.hankel"}), brute_force_catalan); }},
      {4, "integral term identity",
       [] { return from_checks({"gray.int_term.n=1", "gray.int_term.n=2", "gray.int_term.n=3", "gray.chern.n=1", "gray.chern.n=2", "gray.chern.n=3"}); }},
      {5, "poincare identity for gray forms",
       [] { return from_checks({"gray.poincare.n=1", "gray.poincare.n=2", "gray.poincare.n=3"}); }},
      {6, "embedded span dimensions", [] { return from_checks({"gray.embedded_span"}); }},
      {7, "weyl lemma", [] { return from_checks({"weyl.lemma"}); }},
      {8, "flat unitary algebra",
       [] {
         return both(from_checks({"unitary.dimensions", "unitary.round_trips", "unitary.algebra_laws", "unitary.pairing",
                                  "unitary.n1_presentation"}),
                     gram_invertible);
       }},
      {9, "transfer coherence",
       [] { return from_checks({"transfer.unitriangular", "transfer.tau_two_path", "transfer.monomial_coherence", "transfer.homomorphism"}); }},
      {10, "glob diagram", [] { return from_checks({"glob.diagram_delta", "glob.diagram_N"}); }},
      {11, "kinematic intertwining and binomial grid",
       [] { return from_checks({"kinematic.intertwining", "transfer.j_binomial_grid"}); }},
      {12, "constant identities",
       [] {
         return from_checks({"weyl.d_recursion", "weyl.d_relations", "weyl.volume_recursion", "weyl.cos_sin", "weyl.sum_p",
                             "gray.catalan_alternating_sum"});
       }},
      {13, "serialization round trips", serialization},
      {14, "module table validation",
       [table_env]() -> Outcome {
         if (!table_env || !*table_env) return {"SKIP", "KLK_MODULE_TABLE not set"};
         return from_checks({"glob.module_table"});
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {"FAIL", std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.status == "FAIL") ++failures;
    std::printf("%s criterion %d (%s) %.2fs%s%s\n", o.status.c_str(), c.id, c.name, secs, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
  }
  std::printf("%d failing\n", failures);
  return failures == 0 ? 0 : 1;
}
