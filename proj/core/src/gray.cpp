#include "klk/gray.hpp"

#include <memory>
#include <mutex>
#include <sstream>

#include "klk/errors.hpp"

namespace klk {

Rational catalan(long k) {
  if (k < 0) throw DomainError("Catalan index must be >= 0");
  return Rational(binomial(2 * k, k)) / (k + 1);
}

GradedPoly g_poly(int k) {
  if (k < 0) throw DomainError("g_k needs k >= 0");
  GradedPoly p;
  for (int i = 0; 2 * i <= k; ++i) {
    Rational c = Rational(binomial(k - i, i)) * power(Rational(2), k - i);
    p.add(i, k - 2 * i, i % 2 ? Rational(-c) : c);
  }
  return p;
}

Rational c_coeff(int k, int p, int j) {
  if (k < 0 || p < 0 || j < 0) throw DomainError("c_{k,p,j} needs nonnegative indices");
  Integer sum = 0;
  for (int l = 0; 2 * p + 2 * l + 1 <= k + 1; ++l)
    sum += binomial(k + 1, 2 * p + 2 * l + 1) * binomial(p + l, l) * binomial(p + l, j);
  Rational c = Rational(sum) * power(Rational(2), j);
  return (p + j) % 2 ? Rational(-c) : c;
}

GradedPoly phi_poly(int k, int p) {
  if (p < 0 || 2 * p > k) throw DomainError("phi_{k,p} needs 0 <= 2p <= k");
  GradedPoly r;
  for (int j = 0; 2 * j <= k; ++j) r.add(j, k - 2 * j, c_coeff(k, p, j));
  return r;
}

int gray_dim(int n, int p) {
  if (p < 0 || p > 2 * n) return 0;
  return 1 + std::min(p, 2 * n - p) / 2;
}

const GradedQuotient& gray_quotient(int n) {
  if (n < 1) throw DomainError("Gray algebra needs n >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GradedQuotient>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot)
    slot = std::make_unique<GradedQuotient>(std::vector<GradedPoly>{g_poly(n + 1), g_poly(n + 2)}, 2 * n,
                                            [n](int k) { return gray_dim(n, k); });
  return *slot;
}

GrayElement gray_normal_form(int n, const GradedPoly& poly) {
  const auto& Q = gray_quotient(n);
  GrayElement e;
  e.n = n;
  e.coords = Q.reduce(poly);
  for (auto it = e.coords.begin(); it != e.coords.end();) {
    bool zero = true;
    for (const auto& c : it->second) zero = zero && c == 0;
    it = zero ? e.coords.erase(it) : std::next(it);
  }
  e.poly = Q.normal_form(poly);
  return e;
}

namespace {

void check_pairing_degrees(int n, const GradedPoly& x, const GradedPoly& y) {
  if (!x.is_homogeneous() || !y.is_homogeneous()) throw DegreeError("pairing needs homogeneous inputs");
  if (x.is_zero() || y.is_zero()) return;
  if (x.max_degree() + y.max_degree() != 2 * n) throw DegreeError("pairing degrees must add up to 2n");
}

}  // namespace

Rational gray_pairing(int n, const GradedPoly& x, const GradedPoly& y) {
  check_pairing_degrees(n, x, y);
  const auto& Q = gray_quotient(n);
  const auto& top = Q.degree(2 * n);
  if (top.basis.size() != 1 || top.basis[0] != 0) throw ConsistencyError("top class is not t^{2n}");
  auto nf = Q.reduce(x * y);
  auto it = nf.find(2 * n);
  return it == nf.end() ? Rational(0) : it->second[0];
}

Rational gray_pairing_concrete(int n, const GradedPoly& x, const GradedPoly& y) {
  check_pairing_degrees(n, x, y);
  if (x.is_zero() || y.is_zero()) return 0;
  return top_coefficient(wedge(realize(n, x).form, realize(n, y).form));
}

Realization realize(int n, const GradedPoly& poly) {
  if (!poly.is_homogeneous()) throw DegreeError("realize needs a homogeneous polynomial");
  int d = poly.max_degree();
  Realization r{DoubleForm(n, std::min(std::max(d, 0), 2 * n), std::min(std::max(d, 0), 2 * n)), false};
  if (d > 2 * n) {
    r.degree_overflow = true;
    return r;
  }
  if (d < 0) return r;
  DoubleForm G = canonical_form(n, CanonicalKind::G), g = canonical_form(n, CanonicalKind::g);
  std::vector<DoubleForm> Gp{DoubleForm::one(n)}, gp{DoubleForm::one(n)};
  for (const auto& [k, c] : poly.terms()) {
    while (static_cast<int>(Gp.size()) <= k.first) Gp.push_back(wedge(Gp.back(), G));
    while (static_cast<int>(gp.size()) <= k.second) gp.push_back(wedge(gp.back(), g));
    r.form += c * wedge(Gp[k.first], gp[k.second]);
  }
  return r;
}

Rational catalan_alternating_sum(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("indices must be >= 0");
  Rational sum = 0;
  for (int i = 0; n - k - i >= 0; ++i) {
    Rational term = Rational(binomial(n + 1 - i, i)) * catalan(n - k - i);
    sum += i % 2 ? Rational(-term) : term;
  }
  return sum;
}

RMatrix gray_pairing_matrix(int n, int p) {
  if (p < 0 || p > 2 * n) throw DegreeError("degree out of range");
  int low = std::min(p, 2 * n - p);
  int m = low / 2, odd = low % 2;
  // A_i = G^{m-i} g^{2i+odd} in degree low, B_j = G^{n-m-odd-j} g^{2j+odd} in degree 2n-low
  RMatrix M = zero_matrix(m + 1, m + 1);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) {
      GradedPoly a = GradedPoly::monomial(m - i, 2 * i + odd);
      GradedPoly b = GradedPoly::monomial(n - m - odd - j, 2 * j + odd);
      M[i][j] = gray_pairing(n, a, b);
    }
  if (p > n) {
    RMatrix T = zero_matrix(m + 1, m + 1);
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j) T[i][j] = M[j][i];
    return T;
  }
  return M;
}

std::string gray_pairing_csv(int n, int p) {
  RMatrix M = gray_pairing_matrix(n, p);
  std::ostringstream os;
  os << "row,col,value\n";
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M[i].size(); ++j) os << i << "," << j << "," << to_string(M[i][j]) << "\n";
  return os.str();
}

}  // namespace klk
