#pragma once

#include <map>
#include <utility>
#include <vector>

#include "klk/rational.hpp"

namespace klk {

// Bivariate power series in (xi, eta) truncated at total order N.
class PowerSeries2 {
 public:
  using Key = std::pair<int, int>;  // (xi power, eta power)

  explicit PowerSeries2(int order = 0);
  static PowerSeries2 constant(const Rational& c, int order);

  int order() const { return order_; }
  const std::map<Key, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i, int j) const;
  void add(int i, int j, const Rational& c);  // ignored beyond the order

  PowerSeries2& operator+=(const PowerSeries2& o);
  PowerSeries2& operator*=(const Rational& q);
  friend PowerSeries2 operator+(PowerSeries2 a, const PowerSeries2& b) { return a += b; }
  // Truncated at the smaller of the two orders.
  friend PowerSeries2 operator*(const PowerSeries2& a, const PowerSeries2& b);
  friend bool operator==(const PowerSeries2& a, const PowerSeries2& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  // i! j! * coefficient of xi^i eta^j, i.e. the mixed partial at the origin.
  Rational derivative_at_zero(int i, int j) const;

 private:
  int order_;
  std::map<Key, Rational> coeffs_;
};

// (c0 - a*xi - b*eta)^exponent
struct AffineFactor {
  Rational a;
  Rational b;
  Rational exponent;
  Rational c0 = 1;
};

// Taylor expansion of xi^m eta^p * prod(factors) at the origin, truncated at
// total order N. Throws SingularExpansionError if a base vanishes at 0.
PowerSeries2 series_expand(const std::vector<AffineFactor>& factors, int m, int p, int order);

}  // namespace klk
