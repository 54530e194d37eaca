#pragma once

#include <map>
#include <string>
#include <utility>

#include "klk/rational.hpp"

namespace klk {

// Finite sum of c * pi^a * lambda^b with rational c, integer a and b >= 0.
// Terms with zero coefficient are never stored.
class PiLambdaScalar {
 public:
  using Key = std::pair<int, int>;  // (pi power, lambda power)
  using Terms = std::map<Key, Rational>;

  PiLambdaScalar() = default;
  PiLambdaScalar(const Rational& q);  // NOLINT: rationals embed implicitly
  PiLambdaScalar(long v);             // NOLINT
  PiLambdaScalar(int v) : PiLambdaScalar(static_cast<long>(v)) {}  // NOLINT

  static PiLambdaScalar monomial(const Rational& c, int pi_power, int lambda_power);
  static PiLambdaScalar pi(int power = 1) { return monomial(1, power, 0); }
  static PiLambdaScalar lambda(int power = 1) { return monomial(1, 0, power); }
  static PiLambdaScalar from_terms(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // Throws DomainError unless the value is a plain rational.
  Rational rational_value() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational coeff(int pi_power, int lambda_power) const;
  int max_lambda_power() const;  // -1 for zero

  PiLambdaScalar& operator+=(const PiLambdaScalar& o);
  PiLambdaScalar& operator-=(const PiLambdaScalar& o);
  PiLambdaScalar& operator*=(const PiLambdaScalar& o);
  PiLambdaScalar& operator*=(const Rational& q);
  // Only rationals and pi-monomials (lambda power 0) are valid divisors.
  PiLambdaScalar& operator/=(const PiLambdaScalar& o);

  friend PiLambdaScalar operator+(PiLambdaScalar a, const PiLambdaScalar& b) { return a += b; }
  friend PiLambdaScalar operator-(PiLambdaScalar a, const PiLambdaScalar& b) { return a -= b; }
  friend PiLambdaScalar operator*(PiLambdaScalar a, const PiLambdaScalar& b) { return a *= b; }
  friend PiLambdaScalar operator/(PiLambdaScalar a, const PiLambdaScalar& b) { return a /= b; }
  PiLambdaScalar operator-() const;

  friend bool operator==(const PiLambdaScalar& a, const PiLambdaScalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PiLambdaScalar& a, const PiLambdaScalar& b) { return !(a == b); }

  PiLambdaScalar pow(unsigned e) const;
  // Substitute lambda = 0.
  PiLambdaScalar at_lambda_zero() const;

  std::string str() const;  // human readable, e.g. "1/2*pi^-1*lambda"

 private:
  void add_term(const Key& k, const Rational& c);
  Terms terms_;
};

using Scalar = PiLambdaScalar;

// Sums of c * pi^(h/2). Only used while computing sphere moments, where the
// half powers are expected to cancel.
class HalfPiScalar {
 public:
  using Terms = std::map<int, Rational>;  // half-power h -> coefficient of pi^(h/2)

  HalfPiScalar() = default;
  HalfPiScalar(const Rational& q);  // NOLINT
  static HalfPiScalar monomial(const Rational& c, int half_power);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  HalfPiScalar& operator+=(const HalfPiScalar& o);
  HalfPiScalar& operator*=(const HalfPiScalar& o);
  // Divisor must be a single term.
  HalfPiScalar& operator/=(const HalfPiScalar& o);
  friend HalfPiScalar operator+(HalfPiScalar a, const HalfPiScalar& b) { return a += b; }
  friend HalfPiScalar operator*(HalfPiScalar a, const HalfPiScalar& b) { return a *= b; }
  friend HalfPiScalar operator/(HalfPiScalar a, const HalfPiScalar& b) { return a /= b; }
  friend bool operator==(const HalfPiScalar& a, const HalfPiScalar& b) {
    return a.terms_ == b.terms_;
  }

  // Throws ConsistencyError if an odd half power survives.
  PiLambdaScalar to_pi_lambda() const;
  std::string str() const;

 private:
  void add_term(int h, const Rational& c);
  Terms terms_;
};

// Gamma(k/2) for k >= 1.
HalfPiScalar gamma_half(long k);

}  // namespace klk
