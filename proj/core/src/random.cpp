#include "klk/random.hpp"

namespace klk {

long Rng::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

Rational Rng::rational(long bound, long max_den) { return make_rational(integer(-bound, bound), integer(1, max_den)); }

Rational Rng::nonzero_rational(long bound, long max_den) {
  for (;;) {
    Rational r = rational(bound, max_den);
    if (r != 0) return r;
  }
}

Scalar random_scalar(Rng& rng, int max_terms) {
  Scalar x;
  int terms = static_cast<int>(rng.integer(0, max_terms));
  for (int i = 0; i < terms; ++i)
    x += Scalar::monomial(rng.nonzero_rational(), static_cast<int>(rng.integer(-3, 3)), static_cast<int>(rng.integer(0, 3)));
  return x;
}

DoubleForm random_double_form(Rng& rng, int n, int p, int q, int max_entries) {
  DoubleForm f(n, p, q);
  auto ps = subsets(2 * n, p), qs = subsets(2 * n, q);
  int count = static_cast<int>(rng.integer(0, max_entries));
  for (int i = 0; i < count; ++i) {
    auto I = ps[rng.integer(0, static_cast<long>(ps.size()) - 1)];
    auto J = qs[rng.integer(0, static_cast<long>(qs.size()) - 1)];
    f.add(I, J, rng.rational());
  }
  return f;
}

GradedPoly random_graded_poly(Rng& rng, int max_degree, int max_terms) {
  GradedPoly p;
  int terms = static_cast<int>(rng.integer(0, max_terms));
  for (int i = 0; i < terms; ++i) {
    int d = static_cast<int>(rng.integer(0, max_degree));
    int a = static_cast<int>(rng.integer(0, d / 2));
    p.add(a, d - 2 * a, rng.nonzero_rational());
  }
  return p;
}

GradedPoly random_homogeneous_poly(Rng& rng, int degree) {
  GradedPoly p;
  for (int a = 0; 2 * a <= degree; ++a) p.add(a, degree - 2 * a, rng.rational());
  return p;
}

RMatrix random_symmetric(Rng& rng, int m) {
  RMatrix a = zero_matrix(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) a[i][j] = a[j][i] = rng.rational(3, 2);
  return a;
}

std::vector<SymBilinear> random_sffs(Rng& rng, int m, int pairs) {
  std::vector<SymBilinear> out;
  for (int r = 0; r < pairs; ++r) {
    auto [re, im] = complex_sff(random_symmetric(rng, m), random_symmetric(rng, m));
    out.push_back(re);
    out.push_back(im);
  }
  return out;
}

KahlerTensor random_kahler_tensor(Rng& rng, int m) {
  return gauss_from_sff(m, random_sffs(rng, m, static_cast<int>(rng.integer(1, 2))));
}

FlatValuation random_flat_valuation(Rng& rng, int n, FlatBasis basis) {
  FlatValuation x{n, FlatBasis::Mu, {}};
  for (const auto& idx : mu_indices(n))
    if (rng.integer(0, 2) == 0) x.add(idx, random_scalar(rng, 2));
  return basis_convert(x, basis);
}

CurvedValuation random_curved_valuation(Rng& rng, int n, CurvedBasis basis) {
  CurvedValuation x{n, basis, {}};
  for (const auto& idx : mu_indices(n))
    if (rng.integer(0, 2) == 0) x.add(idx, random_scalar(rng, 2));
  return x;
}

CurvElement random_curv_element(Rng& rng, int n) {
  CurvElement x{n, {}};
  for (const auto& key : curv_basis(n).all())
    if (rng.integer(0, 2) == 0) x.add(key, random_scalar(rng, 2));
  return x;
}

}  // namespace klk
