#pragma once

#include <map>
#include <utility>
#include <vector>

#include "klk/double_form.hpp"
#include "klk/kahler.hpp"
#include "klk/scalar.hpp"

namespace klk {

Scalar ball_volume(long n);    // omega_n
Scalar sphere_volume(long n);  // s_n = (n+1) omega_{n+1}

// [(2 pi)^l l! (k+1)! (n-2l-k)! omega_{n-2l-k}]^{-1}; zero when n-2l-k < 0
// or when an index is not an integer.
Scalar d_constant(long n, long k, long l);
Scalar d_constant(const Rational& n, const Rational& k, const Rational& l);
// pi^k/((k+1)! omega_k) 2^{-l} binom(k/2+l, l) omega_{k+2l}/(pi^{k+2l}(n-2l-k)! omega_{n-2l-k})
Scalar d_constant_first_form(long n, long k, long l);

// Integral over S^{N-1} of prod y_i^{alpha_i}, N = alpha.size().
Scalar sphere_moment(const std::vector<int>& alpha);
HalfPiScalar sphere_moment_half(const std::vector<int>& alpha);

// Integral of cos^a sin^b over [0, pi/2] by the Beta-function route.
Scalar cos_sin_integral(long a, long b);
// s_{a+b+1}/(s_a s_b)
Scalar cos_sin_sphere_ratio(long a, long b);

// Double form with coefficients in PiLambdaScalar, stored as a sum of
// scalar monomial times rational form.
class ScalarForm {
 public:
  ScalarForm(int n, int p, int q) : n_(n), p_(p), q_(q) {}
  void add(const Scalar& c, const DoubleForm& f);
  const std::map<PiLambdaScalar::Key, DoubleForm>& parts() const { return parts_; }
  friend bool operator==(const ScalarForm& a, const ScalarForm& b) { return a.parts_ == b.parts_; }
  bool is_zero() const { return parts_.empty(); }

 private:
  int n_, p_, q_;
  std::map<PiLambdaScalar::Key, DoubleForm> parts_;
};

struct WeylCheck {
  ScalarForm lhs;
  ScalarForm rhs;
  bool equal = false;
};

// Sphere integral of H^{power} with H = sum_r y_r l_r over S^{2d-1}, 2d sffs.
ScalarForm weyl_integral(int d, int power, const std::vector<SymBilinear>& sffs);
// lhs = integral of H^{2e}; rhs = 2^{e+1} s_{2d+2e-1}/s_{2e} (1/2 sum_r l_r ^ l_r)^e
WeylCheck weyl_integral_check(int d, int e, const std::vector<SymBilinear>& sffs);

}  // namespace klk
