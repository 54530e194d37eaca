#include "klk/series.hpp"

#include "klk/errors.hpp"

namespace klk {

PowerSeries2::PowerSeries2(int order) : order_(order) {
  if (order < 0) throw DomainError("negative series order");
}

PowerSeries2 PowerSeries2::constant(const Rational& c, int order) {
  PowerSeries2 s(order);
  s.add(0, 0, c);
  return s;
}

Rational PowerSeries2::coeff(int i, int j) const {
  auto it = coeffs_.find(Key{i, j});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void PowerSeries2::add(int i, int j, const Rational& c) {
  if (i < 0 || j < 0 || i + j > order_ || c == 0) return;
  auto [it, inserted] = coeffs_.emplace(Key{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

PowerSeries2& PowerSeries2::operator+=(const PowerSeries2& o) {
  for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, c);
  return *this;
}

PowerSeries2& PowerSeries2::operator*=(const Rational& q) {
  if (q == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, c] : coeffs_) c *= q;
  return *this;
}

PowerSeries2 operator*(const PowerSeries2& a, const PowerSeries2& b) {
  PowerSeries2 r(std::min(a.order_, b.order_));
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_)
      r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

Rational PowerSeries2::derivative_at_zero(int i, int j) const {
  return coeff(i, j) * Rational(factorial(i) * factorial(j));
}

namespace {

PowerSeries2 expand_factor(const AffineFactor& f, int order) {
  if (f.c0 == 0) throw SingularExpansionError("factor base vanishes at the origin");
  Rational lead;
  if (is_integer(f.exponent)) {
    lead = power(f.c0, to_long(f.exponent));
  } else if (f.c0 == 1) {
    lead = 1;
  } else {
    throw DomainError("non-integer power of a base with constant term other than 1");
  }
  // c0^e * sum_k binom(e, k) (-(a xi + b eta)/c0)^k
  PowerSeries2 s(order);
  for (int k = 0; k <= order; ++k) {
    Rational ck = lead * gen_binomial(f.exponent, k) * power(-1 / f.c0, k);
    if (ck == 0) continue;
    for (int i = 0; i <= k; ++i) {
      Rational term = ck * Rational(binomial(k, i)) * power(f.a, i) * power(f.b, k - i);
      s.add(i, k - i, term);
    }
  }
  return s;
}

}  // namespace

PowerSeries2 series_expand(const std::vector<AffineFactor>& factors, int m, int p, int order) {
  if (order < 0) throw DomainError("negative series order");
  if (m < 0 || p < 0) throw DomainError("negative monomial prefix");
  for (const auto& f : factors)
    if (f.c0 == 0) throw SingularExpansionError("factor base vanishes at the origin");
  PowerSeries2 result(order);
  int rest = order - m - p;
  if (rest < 0) return result;
  PowerSeries2 body = PowerSeries2::constant(1, rest);
  for (const auto& f : factors) body = body * expand_factor(f, rest);
  for (const auto& [k, c] : body.coeffs()) result.add(k.first + m, k.second + p, c);
  return result;
}

}  // namespace klk
