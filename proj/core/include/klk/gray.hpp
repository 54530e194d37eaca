#pragma once

#include <map>
#include <string>
#include <vector>

#include "klk/double_form.hpp"
#include "klk/graded.hpp"

namespace klk {

Rational catalan(long k);
GradedPoly g_poly(int k);
Rational c_coeff(int k, int p, int j);
GradedPoly phi_poly(int k, int p);

// Q[s,t]/(g_{n+1}, g_{n+2}); cached per n.
const GradedQuotient& gray_quotient(int n);
int gray_dim(int n, int p);  // 1 + floor(min(p, 2n-p)/2), 0 outside [0, 2n]

struct GrayElement {
  int n = 0;
  std::map<int, std::vector<Rational>> coords;  // degree -> coords in the reduced basis
  GradedPoly poly;                              // same element in basis monomials
  bool is_zero() const { return poly.is_zero(); }
};

GrayElement gray_normal_form(int n, const GradedPoly& poly);
// Top-degree coefficient of x*y; x and y homogeneous with deg x + deg y = 2n.
Rational gray_pairing(int n, const GradedPoly& x, const GradedPoly& y);
// Same value from the double-form realization.
Rational gray_pairing_concrete(int n, const GradedPoly& x, const GradedPoly& y);

struct Realization {
  DoubleForm form;
  bool degree_overflow = false;  // degree > 2n: forced zero
};
// s -> G, t -> g. Homogeneous input.
Realization realize(int n, const GradedPoly& poly);

Rational catalan_alternating_sum(int n, int k);

// Pairing matrix between {2^{a-m} G^{m-a} g^{2a}} style families used for
// the structure theorem; entries (i, j) = <G^{top_a - i} g^{..}, G^{top_b - j} g^{..}>.
RMatrix gray_pairing_matrix(int n, int p);
std::string gray_pairing_csv(int n, int p);

}  // namespace klk
