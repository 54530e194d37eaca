#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klk/graded.hpp"
#include "klk/linalg.hpp"
#include "klk/scalar.hpp"

namespace klk {

using Index = std::pair<int, int>;

enum class FlatBasis { Monomial, Mu, Tau };
std::string basis_name(FlatBasis b);
FlatBasis parse_flat_basis(const std::string& s);

// Element of Val^{U(n)}. Monomial keys are (s-power, t-power) of reduced
// basis monomials; mu/tau keys are (k, p).
struct FlatValuation {
  int n = 0;
  FlatBasis basis = FlatBasis::Mu;
  std::map<Index, Scalar> coords;

  void add(const Index& i, const Scalar& c);
  Scalar coeff(const Index& i) const;
  bool is_zero() const { return coords.empty(); }
  FlatValuation& operator+=(const FlatValuation& o);  // same basis required
  FlatValuation& operator*=(const Scalar& c);
  friend bool operator==(const FlatValuation& a, const FlatValuation& b) {
    return a.n == b.n && a.basis == b.basis && a.coords == b.coords;
  }
  friend bool operator!=(const FlatValuation& a, const FlatValuation& b) { return !(a == b); }
};

FlatValuation operator+(FlatValuation a, const FlatValuation& b);
FlatValuation operator-(FlatValuation a, const FlatValuation& b);
FlatValuation operator*(const Scalar& c, FlatValuation a);

bool valid_mu_index(int n, int k, int p);  // 0 <= k <= 2n, max(0,k-n) <= p <= k/2
std::vector<Index> mu_indices(int n, int k);
std::vector<Index> mu_indices(int n);
int val_dim(int n, int k);  // 1 + min(k/2, (2n-k)/2), 0 outside [0, 2n]

GradedPoly f_poly(int k);
const GradedQuotient& val_quotient(int n);

// pi^k/(omega_k (k-2q)!(2q)!) t^{k-2q} (4s - t^2)^q
ScalarPoly tau_monomial_poly(int k, int q);

FlatValuation val_normal_form(int n, const GradedPoly& poly);
FlatValuation val_normal_form(int n, const ScalarPoly& poly);
FlatValuation basis_convert(const FlatValuation& x, FlatBasis target);
// Product in the basis of x.
FlatValuation val_multiply(const FlatValuation& x, const FlatValuation& y);
FlatValuation val_power(const FlatValuation& x, int e);

FlatValuation mu_element(int n, int k, int p);
FlatValuation tau_element(int n, int k, int q);
FlatValuation flat_unit(int n);  // chi = mu_{0,0} = 1
FlatValuation flat_monomial(int n, int a, int b, FlatBasis target = FlatBasis::Monomial);

// Gram matrix of <x, y> = coefficient of mu_{2n,n} in x*y on the mu basis.
struct PairingForm {
  int n = 0;
  std::vector<Index> basis;
  SMatrix gram;
  SMatrix inverse;
};
const PairingForm& pd_pairing(int n);
Scalar pd(const FlatValuation& x, const FlatValuation& y);
// <x, mu_i> for every mu basis index i, in pd_pairing(n).basis order.
std::vector<Scalar> pd_apply(const FlatValuation& x);
// Coefficient of mu_{2n,n}; this is <x, chi>, the counit of k0.
Scalar val_counit(const FlatValuation& x);

// Element of A (x) A over tagged bases.
struct ValTensor {
  int n = 0;
  std::string left = "mu";
  std::string right = "mu";
  std::map<std::pair<Index, Index>, Scalar> coords;

  void add(const Index& a, const Index& b, const Scalar& c);
  friend bool operator==(const ValTensor& a, const ValTensor& b) {
    return a.n == b.n && a.left == b.left && a.right == b.right && a.coords == b.coords;
  }
  friend bool operator!=(const ValTensor& a, const ValTensor& b) { return !(a == b); }
};
ValTensor swap_factors(const ValTensor& t);

// (pd (x) pd)^{-1} o m^* o pd, in mu (x) mu coordinates.
ValTensor kinematic_k0(int n, const FlatValuation& x);

}  // namespace klk
