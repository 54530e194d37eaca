#include "klk/valuations.hpp"

#include <memory>
#include <mutex>

#include "klk/errors.hpp"
#include "klk/weyl.hpp"

namespace klk {

std::string basis_name(FlatBasis b) {
  switch (b) {
    case FlatBasis::Monomial: return "monomial";
    case FlatBasis::Mu: return "mu";
    case FlatBasis::Tau: return "tau";
  }
  return "?";
}

FlatBasis parse_flat_basis(const std::string& s) {
  if (s == "monomial") return FlatBasis::Monomial;
  if (s == "mu") return FlatBasis::Mu;
  if (s == "tau") return FlatBasis::Tau;
  throw ParseError("unknown flat basis '" + s + "'", 0);
}

void FlatValuation::add(const Index& i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coords.emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords.erase(it);
  }
}

Scalar FlatValuation::coeff(const Index& i) const {
  auto it = coords.find(i);
  return it == coords.end() ? Scalar() : it->second;
}

FlatValuation& FlatValuation::operator+=(const FlatValuation& o) {
  if (o.n != n) throw DimensionError("valuations on different spaces");
  if (o.basis != basis) return *this += basis_convert(o, basis);
  for (const auto& [i, c] : o.coords) add(i, c);
  return *this;
}

FlatValuation& FlatValuation::operator*=(const Scalar& c) {
  if (c.is_zero()) coords.clear();
  for (auto& [i, v] : coords) v *= c;
  return *this;
}

FlatValuation operator+(FlatValuation a, const FlatValuation& b) { return a += b; }
FlatValuation operator-(FlatValuation a, const FlatValuation& b) {
  FlatValuation nb = b;
  nb *= Scalar(-1L);
  return a += nb;
}
FlatValuation operator*(const Scalar& c, FlatValuation a) { return a *= c; }

bool valid_mu_index(int n, int k, int p) {
  return k >= 0 && k <= 2 * n && p >= std::max(0, k - n) && 2 * p <= k;
}

std::vector<Index> mu_indices(int n, int k) {
  std::vector<Index> out;
  for (int p = std::max(0, k - n); 2 * p <= k; ++p)
    if (valid_mu_index(n, k, p)) out.emplace_back(k, p);
  return out;
}

std::vector<Index> mu_indices(int n) {
  std::vector<Index> out;
  for (int k = 0; k <= 2 * n; ++k)
    for (const auto& i : mu_indices(n, k)) out.push_back(i);
  return out;
}

int val_dim(int n, int k) {
  if (k < 0 || k > 2 * n) return 0;
  return 1 + std::min(k / 2, (2 * n - k) / 2);
}

GradedPoly f_poly(int k) {
  if (k < 1) throw DomainError("f_k needs k >= 1");
  // log(1 + u) = sum_m (-1)^{m+1} u^m / m with u = t x + s x^2;
  // the x^k part of u^m is binom(m, j) t^{m-j} s^j with m + j = k
  GradedPoly p;
  for (int j = 0; 2 * j <= k; ++j) {
    int m = k - j;
    Rational c = Rational(binomial(m, j)) / m;
    p.add(j, m - j, (m + 1) % 2 ? Rational(-c) : c);
  }
  return p;
}

const GradedQuotient& val_quotient(int n) {
  if (n < 1) throw DomainError("Val^{U(n)} needs n >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GradedQuotient>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot)
    slot = std::make_unique<GradedQuotient>(std::vector<GradedPoly>{f_poly(n + 1), f_poly(n + 2)}, 2 * n,
                                            [n](int k) { return val_dim(n, k); });
  return *slot;
}

ScalarPoly tau_monomial_poly(int k, int q) {
  if (q < 0 || 2 * q > k) throw DomainError("tau index out of range");
  Scalar c = Scalar::pi(k) / (ball_volume(k) * Scalar(Rational(factorial(k - 2 * q) * factorial(2 * q))));
  GradedPoly u = Rational(4) * GradedPoly::s() - GradedPoly::monomial(0, 2);
  GradedPoly body = GradedPoly::monomial(0, k - 2 * q) * u.pow(q);
  ScalarPoly out = to_scalar_poly(body);
  out *= c;
  return out;
}

namespace {

struct ValAlgebra {
  int n;
  // per degree: rows = quotient basis monomials, cols = mu indices of that degree
  std::vector<SMatrix> mu_to_mono;
  std::vector<SMatrix> mono_to_mu;
  std::vector<Index> basis;                         // all mu indices
  std::map<Index, std::size_t> position;
  std::vector<std::vector<std::vector<Scalar>>> products;  // mu_a * mu_c in mu coords
};

const ValAlgebra& val_algebra(int n);

std::vector<Scalar> mono_vector(const GradedQuotient& Q, int k, const ScalarPoly& p) {
  auto red = Q.reduce(p);
  auto it = red.find(k);
  if (it == red.end()) return std::vector<Scalar>(Q.dim(k));
  return it->second;
}

FlatValuation mono_to_mu(const FlatValuation& x) {
  const auto& A = val_algebra(x.n);
  const auto& Q = val_quotient(x.n);
  FlatValuation out{x.n, FlatBasis::Mu, {}};
  std::map<int, std::vector<Scalar>> by_deg;
  for (const auto& [key, c] : x.coords) {
    int k = 2 * key.first + key.second;
    if (k > 2 * x.n) throw DegreeError("monomial above top degree");
    const auto& basis = Q.degree(k).basis;
    auto pos = std::find(basis.begin(), basis.end(), key.first);
    if (pos == basis.end()) throw DomainError("monomial coordinate is not a reduced basis monomial");
    auto& v = by_deg[k];
    if (v.empty()) v.assign(basis.size(), Scalar());
    v[pos - basis.begin()] += c;
  }
  for (const auto& [k, v] : by_deg) {
    auto idx = mu_indices(x.n, k);
    const auto& M = A.mono_to_mu[k];
    for (std::size_t i = 0; i < idx.size(); ++i) {
      Scalar s;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!M[i][j].is_zero() && !v[j].is_zero()) s += M[i][j] * v[j];
      out.add(idx[i], s);
    }
  }
  return out;
}

FlatValuation mu_to_mono(const FlatValuation& x) {
  const auto& A = val_algebra(x.n);
  const auto& Q = val_quotient(x.n);
  FlatValuation out{x.n, FlatBasis::Monomial, {}};
  for (const auto& [idx, c] : x.coords) {
    int k = idx.first;
    auto cols = mu_indices(x.n, k);
    auto pos = std::find(cols.begin(), cols.end(), idx);
    if (pos == cols.end()) throw DomainError("invalid mu index");
    std::size_t j = pos - cols.begin();
    const auto& basis = Q.degree(k).basis;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Scalar& m = A.mu_to_mono[k][i][j];
      if (!m.is_zero()) out.add({basis[i], k - 2 * basis[i]}, m * c);
    }
  }
  return out;
}

FlatValuation tau_to_mu(const FlatValuation& x) {
  FlatValuation out{x.n, FlatBasis::Mu, {}};
  for (const auto& [idx, c] : x.coords) {
    auto [k, q] = idx;
    if (!valid_mu_index(x.n, k, q)) throw DomainError("invalid tau index");
    for (int i = q; 2 * i <= k; ++i) out.add({k, i}, Scalar(Rational(binomial(i, q))) * c);
  }
  return out;
}

FlatValuation mu_to_tau(const FlatValuation& x) {
  FlatValuation out{x.n, FlatBasis::Tau, {}};
  for (const auto& [idx, c] : x.coords) {
    auto [k, p] = idx;
    if (!valid_mu_index(x.n, k, p)) throw DomainError("invalid mu index");
    for (int q = p; 2 * q <= k; ++q) {
      Rational b(binomial(q, p));
      out.add({k, q}, Scalar((q + p) % 2 ? Rational(-b) : b) * c);
    }
  }
  return out;
}

const ValAlgebra& val_algebra(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ValAlgebra>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  const auto& Q = val_quotient(n);
  auto A = std::make_unique<ValAlgebra>();
  A->n = n;
  for (int k = 0; k <= 2 * n; ++k) {
    auto idx = mu_indices(n, k);
    std::size_t d = Q.dim(k);
    if (idx.size() != d) throw ConsistencyError("mu index count differs from dim Val_k");
    std::vector<std::vector<Scalar>> tau_cols;
    for (const auto& [kk, q] : idx) tau_cols.push_back(mono_vector(Q, k, tau_monomial_poly(k, q)));
    SMatrix M(d, std::vector<Scalar>(d));
    for (std::size_t j = 0; j < idx.size(); ++j) {
      int p = idx[j].second;
      for (std::size_t l = 0; l < idx.size(); ++l) {
        int q = idx[l].second;
        if (q < p) continue;
        Rational b(binomial(q, p));
        Scalar f((q + p) % 2 ? Rational(-b) : b);
        for (std::size_t i = 0; i < d; ++i)
          if (!tau_cols[l][i].is_zero()) M[i][j] += f * tau_cols[l][i];
      }
    }
    A->mu_to_mono.push_back(M);
    A->mono_to_mu.push_back(inverse(M));
  }
  A->basis = mu_indices(n);
  for (std::size_t i = 0; i < A->basis.size(); ++i) A->position[A->basis[i]] = i;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::move(A);
  return *slot;
}

FlatValuation multiply_monomial(const FlatValuation& x, const FlatValuation& y) {
  ScalarPoly px, py;
  for (const auto& [k, c] : x.coords) px.add(k.first, k.second, c);
  for (const auto& [k, c] : y.coords) py.add(k.first, k.second, c);
  return val_normal_form(x.n, px * py);
}

}  // namespace

FlatValuation val_normal_form(int n, const ScalarPoly& poly) {
  const auto& Q = val_quotient(n);
  FlatValuation out{n, FlatBasis::Monomial, {}};
  ScalarPoly nf = Q.normal_form(poly);
  for (const auto& [key, c] : nf.terms()) out.add(key, c);
  return out;
}

FlatValuation val_normal_form(int n, const GradedPoly& poly) { return val_normal_form(n, to_scalar_poly(poly)); }

FlatValuation basis_convert(const FlatValuation& x, FlatBasis target) {
  if (x.basis == target) return x;
  FlatValuation m;
  switch (x.basis) {
    case FlatBasis::Mu: m = x; break;
    case FlatBasis::Tau: m = tau_to_mu(x); break;
    case FlatBasis::Monomial: m = mono_to_mu(x); break;
  }
  switch (target) {
    case FlatBasis::Mu: return m;
    case FlatBasis::Tau: return mu_to_tau(m);
    case FlatBasis::Monomial: return mu_to_mono(m);
  }
  return m;
}

FlatValuation val_multiply(const FlatValuation& x, const FlatValuation& y) {
  if (x.n != y.n) throw DimensionError("multiplying valuations on different spaces");
  FlatValuation r = multiply_monomial(basis_convert(x, FlatBasis::Monomial), basis_convert(y, FlatBasis::Monomial));
  return basis_convert(r, x.basis);
}

FlatValuation val_power(const FlatValuation& x, int e) {
  if (e < 0) throw DomainError("negative power");
  FlatValuation r = basis_convert(flat_unit(x.n), x.basis);
  for (int i = 0; i < e; ++i) r = val_multiply(r, x);
  return r;
}

FlatValuation mu_element(int n, int k, int p) {
  if (!valid_mu_index(n, k, p)) throw DomainError("invalid mu index");
  FlatValuation x{n, FlatBasis::Mu, {}};
  x.add({k, p}, Scalar(1L));
  return x;
}

FlatValuation tau_element(int n, int k, int q) {
  if (!valid_mu_index(n, k, q)) throw DomainError("invalid tau index");
  FlatValuation x{n, FlatBasis::Tau, {}};
  x.add({k, q}, Scalar(1L));
  return x;
}

FlatValuation flat_unit(int n) { return mu_element(n, 0, 0); }

FlatValuation flat_monomial(int n, int a, int b, FlatBasis target) {
  return basis_convert(val_normal_form(n, GradedPoly::monomial(a, b)), target);
}

const PairingForm& pd_pairing(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<PairingForm>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  const auto& A = val_algebra(n);
  auto P = std::make_unique<PairingForm>();
  P->n = n;
  P->basis = A.basis;
  std::size_t D = A.basis.size();
  P->gram.assign(D, std::vector<Scalar>(D));
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) {
      if (A.basis[i].first + A.basis[j].first != 2 * n) continue;
      FlatValuation prod = val_multiply(mu_element(n, A.basis[i].first, A.basis[i].second),
                                        mu_element(n, A.basis[j].first, A.basis[j].second));
      P->gram[i][j] = val_counit(prod);
    }
  try {
    P->inverse = inverse(P->gram);
  } catch (const ConsistencyError&) {
    throw ConsistencyError("Poincare pairing is degenerate for n = " + std::to_string(n));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::move(P);
  return *slot;
}

Scalar val_counit(const FlatValuation& x) {
  return basis_convert(x, FlatBasis::Mu).coeff({2 * x.n, x.n});
}

Scalar pd(const FlatValuation& x, const FlatValuation& y) { return val_counit(val_multiply(x, y)); }

std::vector<Scalar> pd_apply(const FlatValuation& x) {
  const auto& P = pd_pairing(x.n);
  FlatValuation m = basis_convert(x, FlatBasis::Mu);
  std::vector<Scalar> out(P.basis.size());
  for (std::size_t j = 0; j < P.basis.size(); ++j)
    for (std::size_t i = 0; i < P.basis.size(); ++i) {
      Scalar c = m.coeff(P.basis[i]);
      if (!c.is_zero() && !P.gram[i][j].is_zero()) out[j] += c * P.gram[i][j];
    }
  return out;
}

void ValTensor::add(const Index& a, const Index& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coords.emplace(std::pair{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords.erase(it);
  }
}

ValTensor swap_factors(const ValTensor& t) {
  ValTensor r{t.n, t.right, t.left, {}};
  for (const auto& [k, c] : t.coords) r.add(k.second, k.first, c);
  return r;
}

ValTensor kinematic_k0(int n, const FlatValuation& x) {
  if (x.n != n) throw DimensionError("valuation on the wrong space");
  const auto& P = pd_pairing(n);
  std::size_t D = P.basis.size();
  // T[a][c] = <x, mu_a mu_c>
  SMatrix T(D, std::vector<Scalar>(D));
  FlatValuation xm = basis_convert(x, FlatBasis::Mu);
  for (std::size_t a = 0; a < D; ++a) {
    FlatValuation xa = val_multiply(xm, mu_element(n, P.basis[a].first, P.basis[a].second));
    auto row = pd_apply(xa);
    for (std::size_t c = 0; c < D; ++c) T[a][c] = row[c];
  }
  // <x, b_a b_c> = sum_ij K_ij P_ia P_jc, so K = P^{-T} T P^{-1}
  SMatrix PinvT(D, std::vector<Scalar>(D));
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) PinvT[i][j] = P.inverse[j][i];
  SMatrix K = multiply(multiply(PinvT, T), P.inverse);
  ValTensor out{n, "mu", "mu", {}};
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) out.add(P.basis[i], P.basis[j], K[i][j]);
  return out;
}

}  // namespace klk
