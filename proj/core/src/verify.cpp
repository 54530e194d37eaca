#include "klk/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "klk/curvature.hpp"
#include "klk/errors.hpp"
#include "klk/gray.hpp"
#include "klk/kahler.hpp"
#include "klk/random.hpp"
#include "klk/serialize.hpp"
#include "klk/space_forms.hpp"
#include "klk/valuations.hpp"
#include "klk/weyl.hpp"

namespace klk {

bool Report::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::Fail; });
}

std::string Report::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j{{"id", c.id},
                             {"status", c.status == CheckStatus::Pass ? "pass" : c.status == CheckStatus::Fail ? "fail" : "skip"}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    arr.push_back(j);
  }
  return nlohmann::ordered_json{{"suite", suite}, {"ok", ok()}, {"checks", arr}}.dump(2);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gray", "weyl", "unitary", "transfer", "glob", "kinematic", "all"};
  return names;
}

namespace {

class Recorder {
 public:
  explicit Recorder(Report& r) : r_(r) {}

  // Runs `body`; a thrown klk::Error counts as a failure of this check.
  void check(const std::string& id, const std::function<std::string()>& body) {
    CheckRecord rec{id, CheckStatus::Pass, {}};
    try {
      std::string w = body();
      if (!w.empty()) {
        rec.status = CheckStatus::Fail;
        rec.witness = w;
      }
    } catch (const Error& e) {
      rec.status = CheckStatus::Fail;
      rec.witness = std::string("exception: ") + e.what();
    }
    r_.checks.push_back(std::move(rec));
  }

  void skip(const std::string& id, const std::string& why) { r_.checks.push_back({id, CheckStatus::Skip, why}); }

 private:
  Report& r_;
};

std::string idx(std::initializer_list<long> v) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (long x : v) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << ")";
  return os.str();
}

std::string mismatch(const std::string& where, const std::string& lhs, const std::string& rhs) {
  return where + ": lhs=" + lhs + " rhs=" + rhs;
}

// ---------------- gray ----------------

void suite_gray(Recorder& rec, const VerifyBounds& b) {
  int N = std::min(b.n, 3);
  rec.check("gray.relations_vanish", [&]() -> std::string {
    for (int n = 1; n <= N; ++n)
      for (int k : {n + 1, n + 2}) {
        auto r = realize(n, g_poly(k));
        if (!r.form.is_zero()) return "realize(g_" + std::to_string(k) + ") != 0 for n=" + std::to_string(n);
      }
    return "";
  });
  rec.check("gray.dimensions", [&]() -> std::string {
    for (int n = 1; n <= N; ++n)
      for (int p = 0; p <= 2 * n; ++p) {
        RMatrix rows;
        for (int j = 0; 2 * j <= p; ++j) rows.push_back(realize(n, GradedPoly::monomial(j, p - 2 * j)).form.dense());
        int r = static_cast<int>(rank(rows));
        if (r != gray_dim(n, p) || gray_quotient(n).dim(p) != r)
          return mismatch("n,p=" + idx({n, p}), std::to_string(r), std::to_string(gray_dim(n, p)));
      }
    return "";
  });
  rec.check("gray.catalan_pairing", [&]() -> std::string {
    for (int n = 1; n <= std::min(b.n, 4); ++n)
      for (int p = 0; p <= n; ++p) {
        GradedPoly x = GradedPoly::monomial(p, 0), y = GradedPoly::monomial(0, 2 * (n - p));
        Rational expect = power(Rational(2), p) * catalan(n - p) / catalan(n);
        Rational got = gray_pairing(n, x, y);
        if (got != expect) return mismatch("abstract n,p=" + idx({n, p}), to_string(got), to_string(expect));
        Rational conc = gray_pairing_concrete(n, x, y);
        if (conc != expect) return mismatch("concrete n,p=" + idx({n, p}), to_string(conc), to_string(expect));
      }
    return "";
  });
  rec.check("gray.hankel", [&]() -> std::string {
    for (int size = 1; size <= 4; ++size)
      for (int shift : {0, 1}) {
        RMatrix H = zero_matrix(size, size);
        for (int i = 0; i < size; ++i)
          for (int j = 0; j < size; ++j) H[i][j] = catalan(i + j + shift);
        if (determinant(H) != 1) return "Hankel determinant size " + std::to_string(size) + " shift " + std::to_string(shift);
      }
    return "";
  });
  rec.check("gray.phi_vanishing", [&]() -> std::string {
    for (int n = 1; n <= std::min(b.n, 4); ++n)
      for (int k = 0; k <= 2 * n; ++k)
        for (int p = 0; 2 * p <= k; ++p)
          if (k - p > n && !gray_normal_form(n, phi_poly(k, p)).is_zero()) return "phi_{k,p} nonzero at " + idx({n, k, p});
    return "";
  });
  rec.check("gray.recursions", [&]() -> std::string {
    for (int k = 1; k <= 10; ++k)
      for (int p = 0; 2 * p <= k; ++p)
        for (int j = 0; 2 * j <= k; ++j)
          if ((j + 1) * c_coeff(k, p, j + 1) + (k - 2 * j) * c_coeff(k, p, j) != (k + 1) * c_coeff(k - 1, p, j))
            return "c recursion at " + idx({k, p, j});
    for (int k = 0; k <= 8; ++k)
      for (int p = 0; 2 * p <= k; ++p) {
        GradedPoly lhs = Rational(k + 2) * (GradedPoly::t() * phi_poly(k, p));
        GradedPoly rhs = Rational(k - 2 * p + 1) * phi_poly(k + 1, p);
        if (2 * (p + 1) <= k + 1) rhs += Rational(2 * (p + 1)) * phi_poly(k + 1, p + 1);
        if (lhs != rhs) return "phi recursion at " + idx({k, p});
      }
    return "";
  });
  rec.check("gray.catalan_alternating_sum", [&]() -> std::string {
    for (int n = 0; n <= 10; ++n)
      for (int k = 0; k <= n; ++k) {
        Rational expect = Rational(binomial(k, n - k));
        if ((n - k) % 2) expect = -expect;
        if (catalan_alternating_sum(n, k) != expect) return "at " + idx({n, k});
      }
    return "";
  });
  rec.check("gray.normal_form_vs_realization", [&]() -> std::string {
    Rng rng(b.seed);
    for (int n = 1; n <= N; ++n)
      for (int s = 0; s < b.samples; ++s) {
        int d = static_cast<int>(rng.integer(0, 2 * n));
        GradedPoly x = random_homogeneous_poly(rng, d);
        bool abstract_zero = gray_normal_form(n, x).is_zero();
        bool concrete_zero = realize(n, x).form.is_zero();
        if (abstract_zero != concrete_zero) return "disagreement for " + to_json(x) + " n=" + std::to_string(n);
      }
    return "";
  });
  // Kaehler curvature tensors from random second fundamental forms
  Rng rng(b.seed + 17);
  for (int n = 1; n <= N; ++n) {
    std::vector<KahlerTensor> pool;
    for (int s = 0; s < b.samples; ++s) pool.push_back(random_kahler_tensor(rng, n));
    DoubleForm g = canonical_form(n, CanonicalKind::g), G = canonical_form(n, CanonicalKind::G);
    rec.check("gray.int_term.n=" + std::to_string(n), [&]() -> std::string {
      for (std::size_t s = 0; s < pool.size(); ++s)
        for (int q = 0; q <= n; ++q) {
          DoubleForm Rq = wedge_power(pool[s].form(), q);
          Rational base = top_coefficient(wedge(Rq, wedge_power(g, 2 * (n - q))));
          for (int p = 0; p + q <= n; ++p) {
            Rational lhs = top_coefficient(wedge(wedge(wedge_power(G, p), Rq), wedge_power(g, 2 * (n - p - q))));
            Rational rhs = power(Rational(2), p) * catalan(n - p - q) / catalan(n - q) * base;
            if (lhs != rhs) return mismatch("sample,p,q=" + idx({static_cast<long>(s), p, q}), to_string(lhs), to_string(rhs));
          }
        }
      return "";
    });
    rec.check("gray.poincare.n=" + std::to_string(n), [&]() -> std::string {
      for (std::size_t s = 0; s < pool.size(); ++s)
        for (int k = 0; k <= 2 * n; k += 2)
          for (int p = 0; 2 * p <= k; ++p) {
            DoubleForm lhs = wedge(realize(n, phi_poly(k, p)).form, wedge_power(pool[s].form(), n - k / 2));
            DoubleForm rhs(lhs.n(), lhs.p(), lhs.q());
            if (k == 2 * p) rhs = Rational(2 * p + 1) * wedge(wedge_power(pool[s].form(), n - p), wedge_power(g, 2 * p));
            if (lhs != rhs) return "sample,k,p=" + idx({static_cast<long>(s), k, p}) + " lhs=" + to_json(lhs);
          }
      return "";
    });
    rec.check("gray.chern.n=" + std::to_string(n), [&]() -> std::string {
      for (std::size_t s = 0; s < pool.size(); ++s)
        for (int q = 0; q <= n; ++q) {
          auto c = chern_scaled(pool[s], q);
          if (!c.equal)
            return "sample,q=" + idx({static_cast<long>(s), q}) + " lhs=" + to_string(c.lhs) + " contraction=" +
                   to_string(c.via_contraction) + " rhs=" + to_string(c.rhs);
        }
      return "";
    });
  }
  rec.check("gray.embedded_span", [&]() -> std::string {
    const int expect[] = {0, 1, 9, 36};
    for (int m = 1; m <= N; ++m) {
      int d = embedded_span_dim(m, 4, b.seed);
      if (d != expect[m]) return mismatch("m=" + std::to_string(m), std::to_string(d), std::to_string(expect[m]));
    }
    return "";
  });
}

// ---------------- weyl ----------------

void suite_weyl(Recorder& rec, const VerifyBounds& b) {
  rec.check("weyl.volume_recursion", []() -> std::string {
    for (int n = 0; n <= 10; ++n)
      for (int l = 0; l <= 4; ++l) {
        Integer den = 1;
        for (int j = 1; j <= l; ++j) den *= n + 2 * j;
        Scalar rhs = Scalar::monomial(power(Rational(2), l) / Rational(den), l, 0) * ball_volume(n);
        if (ball_volume(n + 2 * l) != rhs) return mismatch("n,l=" + idx({n, l}), ball_volume(n + 2 * l).str(), rhs.str());
      }
    return "";
  });
  rec.check("weyl.d_constant_forms", []() -> std::string {
    for (int n = 0; n <= 8; ++n)
      for (int k = 0; k <= n; ++k)
        for (int l = 0; 2 * l + k <= n; ++l)
          if (d_constant(n, k, l) != d_constant_first_form(n, k, l))
            return mismatch("n,k,l=" + idx({n, k, l}), d_constant(n, k, l).str(), d_constant_first_form(n, k, l).str());
    return "";
  });
  rec.check("weyl.d_recursion", []() -> std::string {
    for (int n = 0; n <= 8; ++n)
      for (int k = 0; k <= n; ++k)
        for (int l = 0; n - 2 * l - k >= 1; ++l) {
          Scalar lhs = Scalar(n - 2 * l - k - 1) * d_constant(n, k, l);
          Scalar rhs = Scalar(l + 1) * d_constant(n, k, l + 1);
          if (lhs != rhs) return mismatch("n,k,l=" + idx({n, k, l}), lhs.str(), rhs.str());
        }
    return "";
  });
  rec.check("weyl.d_relations", []() -> std::string {
    for (int n = 1; n <= 6; ++n)
      for (int m = 0; m < n; ++m)
        for (int k = 0; k <= 2 * m; ++k) {
          for (int l = 0; 2 * l + k <= 2 * m; ++l)
            for (int e = 0; 2 * m - 2 * l - 2 * e - k >= 0; ++e) {
              Scalar lhs = d_constant(2 * n, k, l) * ball_volume(2 * n - 2 * l - k) *
                           Scalar(Rational(factorial(2 * n - 2 * l - k))) /
                           (Scalar::monomial(power(Rational(2), e) * Rational(factorial(e)), e, 0) *
                            ball_volume(2 * m - 2 * l - 2 * e - k) * Scalar(Rational(factorial(2 * m - 2 * l - 2 * e - k))));
              Scalar rhs = d_constant(2 * m, k, l + e) * Scalar(Rational(binomial(l + e, e)));
              if (lhs != rhs) return mismatch("relation 1 n,m,k,l,e=" + idx({n, m, k, l, e}), lhs.str(), rhs.str());
            }
          if (k % 2) continue;
          int h = k / 2;
          for (int l = 0; l <= m - h; ++l) {
            Scalar lhs = d_constant(2 * n, k, l) * Scalar(Rational(factorial(2 * n - 2 * l - k))) *
                         Scalar(power(Rational(2), m - l - h + 1)) * ball_volume(2 * n - 2 * l - k) /
                         (Scalar(Rational(factorial(2 * m - 2 * l - k + 1))) * ball_volume(2 * m - 2 * l - k + 1));
            Scalar rhs = Scalar::pi(k) / (Scalar(Rational(factorial(k + 1))) * ball_volume(k)) /
                         Scalar::monomial(Rational(factorial(h) * factorial(m - h)) * power(Rational(2), m - h), m, 0) *
                         Scalar(Rational(binomial(m - h, l)));
            if (lhs != rhs) return mismatch("relation 2 n,m,k,l=" + idx({n, m, k, l}), lhs.str(), rhs.str());
          }
        }
    return "";
  });
  rec.check("weyl.cos_sin", []() -> std::string {
    for (int a = 0; a <= 10; ++a)
      for (int c = 0; c <= 10; ++c)
        if (cos_sin_integral(a, c) != cos_sin_sphere_ratio(a, c) || cos_sin_integral(a, c) != cos_sin_integral(c, a))
          return mismatch("a,b=" + idx({a, c}), cos_sin_integral(a, c).str(), cos_sin_sphere_ratio(a, c).str());
    return "";
  });
  rec.check("weyl.sum_p", []() -> std::string {
    for (int k = 0; k <= 8; ++k)
      for (int j = 0; 2 * j <= k; ++j) {
        Rational s = 0;
        for (int p = 0; 2 * p <= k; ++p) s += c_coeff(k, p, j);
        if (s != (j == 0 ? Rational(k + 1) : Rational(0))) return "k,j=" + idx({k, j}) + " sum=" + to_string(s);
      }
    return "";
  });
  rec.check("weyl.lemma", [&]() -> std::string {
    Rng rng(b.seed + 29);
    for (int d = 1; d <= 2; ++d)
      for (int m = 1; m <= std::min(b.n, 2); ++m)
        for (int s = 0; s < b.samples; ++s) {
          auto sffs = random_sffs(rng, m, d);
          for (int e = 0; e <= 2; ++e) {
            auto w = weyl_integral_check(d, e, sffs);
            if (!w.equal) return "d,m,e,sample=" + idx({d, m, e, s});
            if (!weyl_integral(d, 2 * e + 1, sffs).is_zero()) return "odd power nonzero at d,m,e=" + idx({d, m, e});
          }
        }
    return "";
  });
}

// ---------------- unitary ----------------

void suite_unitary(Recorder& rec, const VerifyBounds& b) {
  int N = std::min(b.n, 4);
  rec.check("unitary.dimensions", [&]() -> std::string {
    for (int n = 1; n <= N; ++n)
      for (int k = 0; k <= 2 * n + 2; ++k)
        if (val_quotient(n).dim(k) != val_dim(n, k) || static_cast<int>(mu_indices(n, k).size()) != val_dim(n, k))
          return "n,k=" + idx({n, k});
    return "";
  });
  rec.check("unitary.round_trips", [&]() -> std::string {
    Rng rng(b.seed + 3);
    const FlatBasis all[] = {FlatBasis::Monomial, FlatBasis::Mu, FlatBasis::Tau};
    for (int n = 1; n <= N; ++n)
      for (int s = 0; s < b.samples; ++s)
        for (FlatBasis from : all)
          for (FlatBasis to : all) {
            FlatValuation x = random_flat_valuation(rng, n, from);
            if (basis_convert(basis_convert(x, to), from) != x)
              return basis_name(from) + "->" + basis_name(to) + " n=" + std::to_string(n) + " x=" + to_json(x);
          }
    return "";
  });
  rec.check("unitary.algebra_laws", [&]() -> std::string {
    Rng rng(b.seed + 5);
    for (int n = 1; n <= std::min(b.n, 3); ++n)
      for (int s = 0; s < b.samples; ++s) {
        auto x = random_flat_valuation(rng, n, FlatBasis::Mu), y = random_flat_valuation(rng, n, FlatBasis::Tau),
             z = random_flat_valuation(rng, n, FlatBasis::Monomial);
        if (val_multiply(x, y) != basis_convert(val_multiply(y, x), FlatBasis::Mu)) return "commutativity n=" + std::to_string(n);
        if (val_multiply(val_multiply(x, y), z) != val_multiply(x, val_multiply(y, z))) return "associativity n=" + std::to_string(n);
        if (val_multiply(x, flat_unit(n)) != x) return "unit n=" + std::to_string(n);
      }
    return "";
  });
  rec.check("unitary.pairing", [&]() -> std::string {
    for (int n = 1; n <= std::min(b.n, 3); ++n) {
      const auto& P = pd_pairing(n);
      for (std::size_t i = 0; i < P.basis.size(); ++i)
        for (std::size_t j = 0; j < P.basis.size(); ++j) {
          if (P.gram[i][j] != P.gram[j][i]) return "asymmetric Gram n=" + std::to_string(n);
          if (!P.gram[i][j].is_zero() && P.basis[i].first + P.basis[j].first != 2 * n) return "pairing not graded n=" + std::to_string(n);
        }
    }
    return "";
  });
  rec.check("unitary.n1_presentation", []() -> std::string {
    if (val_normal_form(1, GradedPoly::s()) != val_normal_form(1, make_rational(1, 2) * GradedPoly::monomial(0, 2)))
      return "s != t^2/2";
    if (!val_normal_form(1, GradedPoly::monomial(0, 3)).is_zero()) return "t^3 != 0";
    return "";
  });
  rec.check("unitary.k0_laws", [&]() -> std::string {
    for (int n = 1; n <= std::min(b.n, 2); ++n) {
      const auto basis = mu_indices(n);
      std::map<Index, ValTensor> k0;
      for (const auto& i : basis) k0.emplace(i, kinematic_k0(n, mu_element(n, i.first, i.second)));
      for (const auto& i : basis) {
        const ValTensor& t = k0.at(i);
        if (swap_factors(t) != t) return "cocommutativity at " + idx({n, i.first, i.second});
        // (id (x) eps) and (eps (x) id) recover the input
        FlatValuation left{n, FlatBasis::Mu, {}}, right{n, FlatBasis::Mu, {}};
        for (const auto& [key, c] : t.coords) {
          if (key.second == Index{2 * n, n}) left.add(key.first, c);
          if (key.first == Index{2 * n, n}) right.add(key.second, c);
        }
        if (left != mu_element(n, i.first, i.second) || right != left) return "counit at " + idx({n, i.first, i.second});
        // coassociativity as 3-tensors
        std::map<std::tuple<Index, Index, Index>, Scalar> a, c3;
        for (const auto& [key, v] : t.coords) {
          for (const auto& [k2, w] : k0.at(key.first).coords) a[{k2.first, k2.second, key.second}] += v * w;
          for (const auto& [k2, w] : k0.at(key.second).coords) c3[{key.first, k2.first, k2.second}] += v * w;
        }
        std::erase_if(a, [](const auto& e) { return e.second.is_zero(); });
        std::erase_if(c3, [](const auto& e) { return e.second.is_zero(); });
        if (a != c3) return "coassociativity at " + idx({n, i.first, i.second});
      }
    }
    return "";
  });
}

// ---------------- transfer ----------------

void suite_transfer(Recorder& rec, const VerifyBounds& b) {
  int N = std::min(b.n, 3);
  rec.check("transfer.unitriangular", [&]() -> std::string {
    for (int n = 1; n <= std::min(b.n, 4); ++n)
      for (const auto& [l, p] : mu_indices(n)) {
        auto y = expand_r_mu(n, l, p);
        if (y.coeff({l, p}) != Scalar(1L)) return "diagonal at " + idx({n, l, p});
        if (r_inverse(y) != mu_element(n, l, p)) return "r^{-1} r at " + idx({n, l, p});
        for (const auto& [i, c] : y.coords)
          if (!c.at_lambda_zero().is_zero() && i != Index{l, p}) return "lambda=0 term at " + idx({n, l, p});
      }
    return "";
  });
  rec.check("transfer.tau_two_path", [&]() -> std::string {
    for (int n = 1; n <= N; ++n)
      for (const auto& [k, q] : mu_indices(n)) {
        auto lhs = curved_convert(expand_r_tau(n, k, q), CurvedBasis::MuLambda);
        auto rhs = r_apply(tau_element(n, k, q));
        if (lhs != rhs) return mismatch("n,k,q=" + idx({n, k, q}), to_json(lhs), to_json(rhs));
      }
    return "";
  });
  rec.check("transfer.monomial_coherence", [&]() -> std::string {
    for (int n = 1; n <= N; ++n) {
      CurvedValuation lhs = r_apply(flat_monomial(n, 1, 0, FlatBasis::Mu));
      CurvedValuation rhs = curved_poly_to_muLambda(n, sigma_lambda(n));
      if (lhs != rhs) return mismatch("sigma n=" + std::to_string(n), to_json(lhs), to_json(rhs));
      for (const auto& [k, q] : mu_indices(n)) {
        auto via_monomials = curved_poly_to_muLambda(n, tauLambda_in_curved_monomials(n, k, q));
        auto direct = curved_convert(tau_lambda_element(n, k, q), CurvedBasis::MuLambda);
        if (via_monomials != direct) return mismatch("tau^lambda n,k,q=" + idx({n, k, q}), to_json(via_monomials), to_json(direct));
      }
    }
    return "";
  });
  rec.check("transfer.homomorphism", [&]() -> std::string {
    Rng rng(b.seed + 7);
    for (int n = 1; n <= N; ++n)
      for (int s = 0; s < b.samples; ++s) {
        auto x = random_flat_valuation(rng, n, FlatBasis::Mu), y = random_flat_valuation(rng, n, FlatBasis::Mu);
        if (curved_multiply(r_apply(x), r_apply(y)) != r_apply(val_multiply(x, y))) return "n=" + std::to_string(n);
        if (curved_multiply(curved_unit(n), r_apply(x)) != r_apply(x)) return "unit n=" + std::to_string(n);
      }
    return "";
  });
  rec.check("transfer.j_binomial_grid", []() -> std::string {
    for (int n = 0; n <= 8; ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
          if (j_binomial_lhs(n, i, j) != j_binomial_rhs(n, i, j)) return "n,i,j=" + idx({n, i, j});
    return "";
  });
  rec.check("transfer.O_operator", []() -> std::string {
    for (int i = 0; i <= 3; ++i) {
      const int order = 6;
      PowerSeries2 lhs = O_operator(r_tau_series(2 * i, 0, order));
      Rational pre = Rational(factorial(i)) / Rational(factorial(2 * i));
      PowerSeries2 rhs = series_expand({{make_rational(1, 4), make_rational(1, 4), Rational(-1 - i)}}, i, 0, order);
      rhs *= pre;
      if (!(lhs == rhs)) return "i=" + std::to_string(i);
    }
    return "";
  });
}

// ---------------- glob ----------------

void suite_glob(Recorder& rec, const VerifyBounds& b) {
  int N = std::min(b.n, 3);
  rec.check("glob.curv_dimensions", [&]() -> std::string {
    for (int n = 1; n <= std::min(b.n, 4); ++n) curv_basis(n);
    return "";
  });
  rec.check("glob.flat_rank", [&]() -> std::string {
    for (int n = 1; n <= N; ++n)
      for (const auto& key : curv_basis(n).all()) {
        CurvElement x{n, {}};
        x.add(key, Scalar(1L));
        auto g = glob_flat(x);
        if (key.kind == CurvKind::N ? !g.is_zero() : g != mu_element(n, key.k, key.q)) return "n=" + std::to_string(n);
      }
    return "";
  });
  rec.check("glob.diagram_delta", [&]() -> std::string {
    for (int n = 1; n <= N; ++n)
      for (const auto& [l, q] : mu_indices(n)) {
        auto lhs = glob_curved(R_lambda_delta(n, l, q));
        auto rhs = expand_r_mu(n, l, q);
        if (lhs != rhs) return mismatch("n,l,q=" + idx({n, l, q}), to_json(lhs), to_json(rhs));
      }
    return "";
  });
  rec.check("glob.diagram_N", [&]() -> std::string {
    for (int n = 1; n <= N; ++n)
      for (const auto& [l, q] : curv_basis(n).N) {
        auto g = glob_curved(R_lambda_N(n, l, q));
        if (!g.is_zero()) return "n,l,q=" + idx({n, l, q}) + " glob=" + to_json(g);
      }
    return "";
  });
  rec.check("glob.lambda_zero_identity", [&]() -> std::string {
    for (int n = 1; n <= N; ++n)
      for (const auto& key : curv_basis(n).all()) {
        CurvElement img = key.kind == CurvKind::Delta ? R_lambda_delta(n, key.k, key.q) : R_lambda_N(n, key.k, key.q);
        CurvElement at0{n, {}};
        for (const auto& [k, c] : img.coords) at0.add(k, c.at_lambda_zero());
        CurvElement x{n, {}};
        x.add(key, Scalar(1L));
        if (at0 != x) return "n=" + std::to_string(n) + " " + kind_name(key.kind) + idx({key.k, key.q});
      }
    return "";
  });
  rec.check("glob.lk_measure", [&]() -> std::string {
    for (int n = 1; n <= N; ++n)
      for (int k = 0; k <= 2 * n; ++k) {
        FlatValuation g = glob_flat(lk_measure(n, k));
        FlatValuation expect{n, FlatBasis::Mu, {}};
        for (const auto& i : mu_indices(n, k)) expect.add(i, Scalar(1L));
        if (g != expect) return "n,k=" + idx({n, k});
      }
    return "";
  });
  std::string warning;
  auto table = module_table_from_env(&warning);
  if (!table) {
    rec.skip("glob.module_table", "module checks skipped: " + warning);
    return;
  }
  rec.check("glob.module_table", [&]() -> std::string {
    Rng rng(b.seed + 11);
    int n = table->n();
    for (int s = 0; s < std::max(b.samples, 10); ++s) {
      auto phi = random_flat_valuation(rng, n, FlatBasis::Mu);
      auto x = random_curv_element(rng, n);
      auto lhs = glob_flat(module_multiply(phi, x, *table));
      auto rhs = val_multiply(phi, glob_flat(x));
      if (lhs != rhs) return mismatch("sample " + std::to_string(s), to_json(lhs), to_json(rhs));
      if (module_multiply(flat_unit(n), x, *table) != x) return "unit sample " + std::to_string(s);
    }
    return "";
  });
}

// ---------------- kinematic ----------------

void suite_kinematic(Recorder& rec, const VerifyBounds& b) {
  rec.check("kinematic.intertwining", [&]() -> std::string {
    for (int n = 1; n <= std::min(b.n, 2); ++n) {
      FlatValuation f = val_normal_form(n, lambda_s_power(1, Rational(-(n + 1)), 2 * n));
      for (const auto& [k, p] : mu_indices(n)) {
        FlatValuation phi = mu_element(n, k, p);
        ValTensor lhs = k_lambda(r_apply(phi));
        ValTensor rhs = r_tensor(kinematic_k0(n, val_multiply(phi, f)));
        if (lhs != rhs) return mismatch("n,k,p=" + idx({n, k, p}), to_json(lhs), to_json(rhs));
      }
    }
    return "";
  });
  rec.check("kinematic.lambda_zero", [&]() -> std::string {
    for (int n = 1; n <= std::min(b.n, 2); ++n)
      for (const auto& [k, p] : mu_indices(n)) {
        ValTensor t = k_lambda(mu_lambda_element(n, k, p));
        ValTensor at0{n, "mu", "mu", {}};
        for (const auto& [key, c] : t.coords) at0.add(key.first, key.second, c.at_lambda_zero());
        if (at0 != kinematic_k0(n, mu_element(n, k, p))) return "n,k,p=" + idx({n, k, p});
      }
    return "";
  });
  rec.check("kinematic.J_lambda", [&]() -> std::string {
    for (int n = 1; n <= std::min(b.n, 3); ++n)
      for (const auto& [k, p] : mu_indices(n)) {
        auto J = J_lambda(mu_element(n, k, p));
        CurvedValuation at0{n, CurvedBasis::MuLambda, {}};
        for (const auto& [i, c] : J.coords) at0.add(i, c.at_lambda_zero());
        if (at0 != mu_lambda_element(n, k, p)) return "n,k,p=" + idx({n, k, p});
      }
    return "";
  });
  std::string warning;
  auto table = module_table_from_env(&warning);
  if (!table) {
    rec.skip("kinematic.semi_local", "module checks skipped: " + warning);
    return;
  }
  rec.check("kinematic.semi_local", [&]() -> std::string {
    int n = table->n();
    for (const auto& key : curv_basis(n).all()) {
      CurvElement x{n, {}};
      x.add(key, Scalar(1L));
      CurvValTensor kb = semi_local_kbar(x, *table);
      ValTensor globbed{n, "mu", "mu", {}};
      CurvElement counit{n, {}};
      for (const auto& [k2, c] : kb.coords) {
        if (k2.first.kind == CurvKind::Delta) globbed.add({k2.first.k, k2.first.q}, k2.second, c);
        if (k2.second == Index{2 * n, n}) counit.add(k2.first, c);
      }
      if (globbed != kinematic_k0(n, glob_flat(x))) return "glob compatibility at " + kind_name(key.kind) + idx({key.k, key.q});
      if (counit != x) return "counit at " + kind_name(key.kind) + idx({key.k, key.q});
    }
    return "";
  });
}

}  // namespace

Report run_suite(const std::string& suite, const VerifyBounds& bounds) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw DomainError("unknown suite '" + suite + "'");
  Report r;
  r.suite = suite;
  Recorder rec(r);
  bool all = suite == "all";
  if (all || suite == "gray") suite_gray(rec, bounds);
  if (all || suite == "weyl") suite_weyl(rec, bounds);
  if (all || suite == "unitary") suite_unitary(rec, bounds);
  if (all || suite == "transfer") suite_transfer(rec, bounds);
  if (all || suite == "glob") suite_glob(rec, bounds);
  if (all || suite == "kinematic") suite_kinematic(rec, bounds);
  std::stable_sort(r.checks.begin(), r.checks.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return r;
}

}  // namespace klk
