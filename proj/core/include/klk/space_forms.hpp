#pragma once

#include <map>
#include <string>

#include "klk/series.hpp"
#include "klk/valuations.hpp"

namespace klk {

enum class CurvedBasis { MuLambda, TauLambda };
std::string basis_name(CurvedBasis b);
CurvedBasis parse_curved_basis(const std::string& s);

// Element of V^n_lambda in mu^lambda or tau^lambda coordinates.
struct CurvedValuation {
  int n = 0;
  CurvedBasis basis = CurvedBasis::MuLambda;
  std::map<Index, Scalar> coords;

  void add(const Index& i, const Scalar& c);
  Scalar coeff(const Index& i) const;
  bool is_zero() const { return coords.empty(); }
  CurvedValuation& operator+=(const CurvedValuation& o);
  CurvedValuation& operator*=(const Scalar& c);
  friend bool operator==(const CurvedValuation& a, const CurvedValuation& b) {
    return a.n == b.n && a.basis == b.basis && a.coords == b.coords;
  }
  friend bool operator!=(const CurvedValuation& a, const CurvedValuation& b) { return !(a == b); }
};
CurvedValuation operator+(CurvedValuation a, const CurvedValuation& b);
CurvedValuation operator-(CurvedValuation a, const CurvedValuation& b);
CurvedValuation operator*(const Scalar& c, CurvedValuation a);

CurvedValuation curved_convert(const CurvedValuation& x, CurvedBasis target);
CurvedValuation mu_lambda_element(int n, int k, int p);
CurvedValuation tau_lambda_element(int n, int k, int q);

// Rational parts of f_{l,p} and g_{k,q}, the (pi/lambda)^r prefactor left out.
PowerSeries2 r_mu_series(int l, int p, int order);
PowerSeries2 r_tau_series(int k, int q, int order);

// r_lambda(mu_{l,p}) in mu^lambda coordinates.
CurvedValuation expand_r_mu(int n, int l, int p);
// r_lambda(tau_{k,q}) in tau^lambda coordinates.
CurvedValuation expand_r_tau(int n, int k, int q);

CurvedValuation r_apply(const FlatValuation& x);
FlatValuation r_inverse(const CurvedValuation& y);  // result in mu coordinates
CurvedValuation curved_unit(int n);
CurvedValuation curved_multiply(const CurvedValuation& x, const CurvedValuation& y);

// (1 + c*lambda*s)^alpha truncated to degree <= top, as a polynomial in s, t.
ScalarPoly lambda_s_power(const Rational& c, const Rational& alpha, int top);

// sigma_lambda = r(s) as the polynomial sum_{i=1}^n lambda^{i-1} s^i in the
// curved generator s. Reducing it in the flat quotient would be wrong, the
// curved relations differ.
ScalarPoly sigma_lambda(int n);
// Flat representative of the curved monomial s^a t^b.
FlatValuation curved_monomial_flat(int n, int a, int b);
CurvedValuation curved_monomial_to_muLambda(int n, int a, int b);
// Polynomial in curved s, t (degree <= 2n) equal to tau^lambda_{k,q}.
ScalarPoly tauLambda_in_curved_monomials(int n, int k, int q);
// Evaluate a polynomial in curved monomials as a mu^lambda element.
CurvedValuation curved_poly_to_muLambda(int n, const ScalarPoly& p);

// r_lambda((1 + lambda s)^{-(n+1)} x)
CurvedValuation J_lambda(const FlatValuation& x);
// (F (x) F) k0((1 - lambda s) F^{-1} y); factors tagged "mu_lambda".
ValTensor k_lambda(const CurvedValuation& y);
// (r (x) r) applied to a mu (x) mu tensor.
ValTensor r_tensor(const ValTensor& t);

// c_{m,p} xi^m eta^p -> c_{m,p} binom(m+p,m)/(binom(2m,m) binom(2p,p)) v^m u^p;
// the result reuses PowerSeries2 with (v, u) in place of (xi, eta).
PowerSeries2 O_operator(const PowerSeries2& p);

// Binomial with binom(r, 0) = 1 for every r and binom(r, k) = 0 when
// k < 0 or 0 <= r < k or (r < 0 < k).
Integer grid_binomial(long r, long k);
Integer j_binomial_lhs(int n, int i, int j);
Integer j_binomial_rhs(int n, int i, int j);

}  // namespace klk
