#include "klk/space_forms.hpp"

#include <memory>
#include <mutex>

#include "klk/errors.hpp"
#include "klk/weyl.hpp"

namespace klk {

std::string basis_name(CurvedBasis b) { return b == CurvedBasis::MuLambda ? "mu_lambda" : "tau_lambda"; }

CurvedBasis parse_curved_basis(const std::string& s) {
  if (s == "mu_lambda") return CurvedBasis::MuLambda;
  if (s == "tau_lambda") return CurvedBasis::TauLambda;
  throw ParseError("unknown curved basis '" + s + "'", 0);
}

void CurvedValuation::add(const Index& i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coords.emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords.erase(it);
  }
}

Scalar CurvedValuation::coeff(const Index& i) const {
  auto it = coords.find(i);
  return it == coords.end() ? Scalar() : it->second;
}

CurvedValuation& CurvedValuation::operator+=(const CurvedValuation& o) {
  if (o.n != n) throw DimensionError("curved valuations on different spaces");
  if (o.basis != basis) return *this += curved_convert(o, basis);
  for (const auto& [i, c] : o.coords) add(i, c);
  return *this;
}

CurvedValuation& CurvedValuation::operator*=(const Scalar& c) {
  if (c.is_zero()) coords.clear();
  for (auto& [i, v] : coords) v *= c;
  return *this;
}

CurvedValuation operator+(CurvedValuation a, const CurvedValuation& b) { return a += b; }
CurvedValuation operator-(CurvedValuation a, const CurvedValuation& b) {
  CurvedValuation nb = b;
  nb *= Scalar(-1L);
  return a += nb;
}
CurvedValuation operator*(const Scalar& c, CurvedValuation a) { return a *= c; }

namespace {

// mu^lambda/tau^lambda obey the same index relations as mu/tau.
FlatValuation as_flat(const CurvedValuation& x) {
  return FlatValuation{x.n, x.basis == CurvedBasis::MuLambda ? FlatBasis::Mu : FlatBasis::Tau, x.coords};
}

CurvedValuation as_curved(const FlatValuation& x) {
  if (x.basis == FlatBasis::Monomial) throw ConsistencyError("monomial coordinates have no curved analogue");
  return CurvedValuation{x.n, x.basis == FlatBasis::Mu ? CurvedBasis::MuLambda : CurvedBasis::TauLambda, x.coords};
}

void check_index(int n, int k, int p) {
  if (!valid_mu_index(n, k, p))
    throw DomainError("invalid index (" + std::to_string(k) + "," + std::to_string(p) + ") for n = " + std::to_string(n));
}

}  // namespace

CurvedValuation curved_convert(const CurvedValuation& x, CurvedBasis target) {
  if (x.basis == target) return x;
  return as_curved(basis_convert(as_flat(x), target == CurvedBasis::MuLambda ? FlatBasis::Mu : FlatBasis::Tau));
}

CurvedValuation mu_lambda_element(int n, int k, int p) { return as_curved(mu_element(n, k, p)); }
CurvedValuation tau_lambda_element(int n, int k, int q) { return as_curved(tau_element(n, k, q)); }

PowerSeries2 r_mu_series(int l, int p, int order) {
  int r = l / 2, eps = l % 2;
  Rational pre = Rational(binomial(r, p)) / Rational(factorial(r));
  Rational half = make_rational(1, 2);
  std::vector<AffineFactor> f{{1, 1, Rational(-r - eps + p) - half}, {0, 1, Rational(-r) - half}};
  PowerSeries2 s = series_expand(f, r - p, p, order);
  s *= pre;
  return s;
}

PowerSeries2 r_tau_series(int k, int q, int order) {
  int r = k / 2, eps = k % 2;
  Rational pre = Rational(binomial(r, q)) / Rational(factorial(r));
  Rational half = make_rational(1, 2);
  std::vector<AffineFactor> f{{1, 0, Rational(q - r - eps) - half}, {0, 1, Rational(-q) - half}};
  PowerSeries2 s = series_expand(f, r - q, q, order);
  s *= pre;
  return s;
}

namespace {

// (lambda/pi)^{i+j} * d^{i+j} series * (pi/lambda)^r
Scalar transfer_coefficient(const PowerSeries2& s, int i, int j, int r) {
  Rational d = s.derivative_at_zero(i, j);
  if (d == 0) return Scalar();
  if (i + j < r) throw ConsistencyError("transfer coefficient with a negative lambda power");
  return Scalar::monomial(d, r - i - j, i + j - r);
}

}  // namespace

CurvedValuation expand_r_mu(int n, int l, int p) {
  check_index(n, l, p);
  int r = l / 2, eps = l % 2;
  int order = (2 * n - eps) / 2;
  PowerSeries2 s = r_mu_series(l, p, order);
  CurvedValuation out{n, CurvedBasis::MuLambda, {}};
  for (const auto& [key, c] : s.coeffs()) {
    auto [i, j] = key;
    int K = 2 * (i + j) + eps;
    if (!valid_mu_index(n, K, j)) continue;  // mu^lambda_{K,j} with j < K - n vanishes
    out.add({K, j}, transfer_coefficient(s, i, j, r));
  }
  return out;
}

CurvedValuation expand_r_tau(int n, int k, int q) {
  check_index(n, k, q);
  int r = k / 2, eps = k % 2;
  int order = (2 * n - eps) / 2;
  PowerSeries2 s = r_tau_series(k, q, order);
  // tau^lambda_{K,j} with j < K - n is not a basis element; it is rewritten
  // through its mu^lambda expansion, whose invalid terms vanish
  CurvedValuation mu{n, CurvedBasis::MuLambda, {}};
  for (const auto& [key, c] : s.coeffs()) {
    auto [i, j] = key;
    int K = 2 * (i + j) + eps;
    if (K > 2 * n) continue;
    Scalar v = transfer_coefficient(s, i, j, r);
    for (int a = j; 2 * a <= K; ++a)
      if (valid_mu_index(n, K, a)) mu.add({K, a}, Scalar(Rational(binomial(a, j))) * v);
  }
  return curved_convert(mu, CurvedBasis::TauLambda);
}

namespace {

struct Transfer {
  std::map<Index, CurvedValuation> images;  // r(mu_b)
};

const Transfer& transfer(int n) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<Transfer>> cache;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto T = std::make_unique<Transfer>();
  for (const auto& [k, p] : mu_indices(n)) {
    CurvedValuation img = expand_r_mu(n, k, p);
    for (const auto& [idx, c] : img.coords) {
      if (idx.first < k || (idx.first == k && idx != Index{k, p}))
        throw ConsistencyError("transfer matrix is not unitriangular");
    }
    if (img.coeff({k, p}) != Scalar(1L)) throw ConsistencyError("transfer matrix diagonal entry differs from 1");
    T->images.emplace(Index{k, p}, std::move(img));
  }
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cache[n];
  if (!slot) slot = std::move(T);
  return *slot;
}

}  // namespace

CurvedValuation r_apply(const FlatValuation& x) {
  const auto& T = transfer(x.n);
  CurvedValuation out{x.n, CurvedBasis::MuLambda, {}};
  for (const auto& [idx, c] : basis_convert(x, FlatBasis::Mu).coords) {
    CurvedValuation img = T.images.at(idx);
    img *= c;
    out += img;
  }
  return out;
}

FlatValuation r_inverse(const CurvedValuation& y) {
  const auto& T = transfer(y.n);
  CurvedValuation rest = curved_convert(y, CurvedBasis::MuLambda);
  FlatValuation out{y.n, FlatBasis::Mu, {}};
  // r is unitriangular for the degree filtration, so peel off the lowest degree
  while (!rest.is_zero()) {
    int k = rest.coords.begin()->first.first;
    std::vector<std::pair<Index, Scalar>> low;
    for (const auto& [idx, c] : rest.coords)
      if (idx.first == k) low.emplace_back(idx, c);
    for (const auto& [idx, c] : low) {
      out.add(idx, c);
      CurvedValuation img = T.images.at(idx);
      img *= c;
      rest = rest - img;
    }
    if (!rest.is_zero() && rest.coords.begin()->first.first <= k)
      throw ConsistencyError("back-substitution did not clear degree " + std::to_string(k));
  }
  return out;
}

CurvedValuation curved_unit(int n) { return r_apply(flat_unit(n)); }

CurvedValuation curved_multiply(const CurvedValuation& x, const CurvedValuation& y) {
  if (x.n != y.n) throw DimensionError("curved valuations on different spaces");
  CurvedValuation out = r_apply(val_multiply(r_inverse(x), r_inverse(y)));
  return curved_convert(out, x.basis);
}

ScalarPoly lambda_s_power(const Rational& c, const Rational& alpha, int top) {
  ScalarPoly out;
  for (int m = 0; 2 * m <= top; ++m) {
    Rational coef = gen_binomial(alpha, m) * power(c, m);
    if (coef != 0) out.add(m, 0, Scalar::monomial(coef, 0, m));
  }
  return out;
}

ScalarPoly sigma_lambda(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  ScalarPoly p;
  for (int i = 1; i <= n; ++i) p.add(i, 0, Scalar::lambda(i - 1));
  return p;
}

FlatValuation curved_monomial_flat(int n, int a, int b) {
  if (a < 0 || b < 0) throw DomainError("negative exponent");
  if (2 * a + b > 2 * n) throw DegreeError("curved monomial above degree 2n");
  // curved s = flat s/(1 + lambda s)
  ScalarPoly p = ScalarPoly::monomial(a, b, Scalar(1L)) * lambda_s_power(1, Rational(-a), 2 * n);
  return val_normal_form(n, p.truncated(2 * n));
}

CurvedValuation curved_monomial_to_muLambda(int n, int a, int b) { return r_apply(curved_monomial_flat(n, a, b)); }

ScalarPoly tauLambda_in_curved_monomials(int n, int k, int q) {
  check_index(n, k, q);
  Scalar C = Scalar::pi(k) / (ball_volume(k) * Scalar(Rational(factorial(k - 2 * q) * factorial(2 * q))));
  // C (1 - lambda s) v^{(k-2q)/2} u^q with v = t^2 (1 - lambda s), u = 4s - v
  ScalarPoly out;
  for (int j = 0; j <= q; ++j) {
    Rational coef = Rational(binomial(q, j)) * power(Rational(4), q - j);
    if (j % 2) coef = -coef;
    Rational alpha = Rational(1 - q + j) + make_rational(k, 2);
    ScalarPoly term = ScalarPoly::monomial(q - j, k - 2 * q + 2 * j, Scalar(coef)) * lambda_s_power(-1, alpha, 2 * n);
    out += term;
  }
  out *= C;
  return out.truncated(2 * n);
}

CurvedValuation curved_poly_to_muLambda(int n, const ScalarPoly& p) {
  CurvedValuation out{n, CurvedBasis::MuLambda, {}};
  for (const auto& [key, c] : p.terms()) {
    if (2 * key.first + key.second > 2 * n) continue;
    CurvedValuation m = curved_monomial_to_muLambda(n, key.first, key.second);
    m *= c;
    out += m;
  }
  return out;
}

CurvedValuation J_lambda(const FlatValuation& x) {
  FlatValuation f = val_normal_form(x.n, lambda_s_power(1, Rational(-(x.n + 1)), 2 * x.n));
  return r_apply(val_multiply(basis_convert(x, FlatBasis::Mu), f));
}

ValTensor k_lambda(const CurvedValuation& y) {
  FlatValuation phi{y.n, FlatBasis::Mu, curved_convert(y, CurvedBasis::MuLambda).coords};
  FlatValuation f = val_normal_form(y.n, lambda_s_power(-1, Rational(1), 2 * y.n));
  ValTensor t = kinematic_k0(y.n, val_multiply(phi, f));
  t.left = t.right = "mu_lambda";
  return t;
}

ValTensor r_tensor(const ValTensor& t) {
  if (t.left != "mu" || t.right != "mu") throw DomainError("r (x) r expects a mu (x) mu tensor");
  const auto& T = transfer(t.n);
  ValTensor out{t.n, "mu_lambda", "mu_lambda", {}};
  for (const auto& [key, c] : t.coords) {
    const auto& a = T.images.at(key.first);
    const auto& b = T.images.at(key.second);
    for (const auto& [ia, ca] : a.coords)
      for (const auto& [ib, cb] : b.coords) out.add(ia, ib, c * ca * cb);
  }
  return out;
}

PowerSeries2 O_operator(const PowerSeries2& p) {
  PowerSeries2 out(p.order());
  for (const auto& [key, c] : p.coeffs()) {
    auto [m, q] = key;
    Rational f = Rational(binomial(m + q, m)) / Rational(binomial(2 * m, m) * binomial(2 * q, q));
    out.add(m, q, c * f);
  }
  return out;
}

Integer grid_binomial(long r, long k) {
  if (k == 0) return 1;
  if (k < 0 || r < 0 || r < k) return 0;
  return binomial(r, k);
}

Integer j_binomial_lhs(int n, int i, int j) {
  Integer s = 0;
  for (int k = 0; k <= n + 1; ++k) {
    Integer term = binomial(n + 1, k) * grid_binomial(n - j - k + 1, i + 1);
    if (k % 2) s -= term; else s += term;
  }
  return s;
}

Integer j_binomial_rhs(int n, int i, int j) {
  Integer b = grid_binomial(n - i - 1, n - i - j);
  return (n - j - i) % 2 ? Integer(-b) : b;
}

}  // namespace klk
