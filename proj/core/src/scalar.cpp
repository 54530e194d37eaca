#include "klk/scalar.hpp"

#include <sstream>

#include "klk/errors.hpp"

namespace klk {

PiLambdaScalar::PiLambdaScalar(const Rational& q) {
  if (q != 0) terms_.emplace(Key{0, 0}, q);
}

PiLambdaScalar::PiLambdaScalar(long v) : PiLambdaScalar(Rational(v)) {}

PiLambdaScalar PiLambdaScalar::monomial(const Rational& c, int pi_power, int lambda_power) {
  if (lambda_power < 0) throw DomainError("negative lambda power");
  PiLambdaScalar r;
  if (c != 0) r.terms_.emplace(Key{pi_power, lambda_power}, c);
  return r;
}

PiLambdaScalar PiLambdaScalar::from_terms(const Terms& terms) {
  PiLambdaScalar r;
  for (const auto& [k, c] : terms) {
    if (k.second < 0) throw DomainError("negative lambda power");
    r.add_term(k, c);
  }
  return r;
}

void PiLambdaScalar::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool PiLambdaScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

Rational PiLambdaScalar::rational_value() const {
  if (!is_rational()) throw DomainError("scalar is not rational: " + str());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational PiLambdaScalar::coeff(int pi_power, int lambda_power) const {
  auto it = terms_.find(Key{pi_power, lambda_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

int PiLambdaScalar::max_lambda_power() const {
  int m = -1;
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

PiLambdaScalar& PiLambdaScalar::operator+=(const PiLambdaScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

PiLambdaScalar& PiLambdaScalar::operator-=(const PiLambdaScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

PiLambdaScalar& PiLambdaScalar::operator*=(const PiLambdaScalar& o) {
  if (terms_.empty()) return *this;
  if (o.is_rational()) return *this *= o.rational_value();
  PiLambdaScalar r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term(Key{ka.first + kb.first, ka.second + kb.second}, ca * cb);
  terms_ = std::move(r.terms_);
  return *this;
}

PiLambdaScalar& PiLambdaScalar::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= q;
  return *this;
}

PiLambdaScalar& PiLambdaScalar::operator/=(const PiLambdaScalar& o) {
  if (o.terms_.size() != 1 || o.terms_.begin()->first.second != 0)
    throw DivisionError("division only by rationals or pi-monomials, got " + o.str());
  const auto& [k, c] = *o.terms_.begin();
  Terms out;
  for (const auto& [kk, cc] : terms_) out.emplace(Key{kk.first - k.first, kk.second}, cc / c);
  terms_ = std::move(out);
  return *this;
}

PiLambdaScalar PiLambdaScalar::operator-() const {
  PiLambdaScalar r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

PiLambdaScalar PiLambdaScalar::pow(unsigned e) const {
  PiLambdaScalar r(1L), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

PiLambdaScalar PiLambdaScalar::at_lambda_zero() const {
  PiLambdaScalar r;
  for (const auto& [k, c] : terms_)
    if (k.second == 0) r.terms_.emplace(k, c);
  return r;
}

std::string PiLambdaScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (k.first == 1) os << "*pi";
    else if (k.first != 0) os << "*pi^" << k.first;
    if (k.second == 1) os << "*lambda";
    else if (k.second != 0) os << "*lambda^" << k.second;
  }
  return os.str();
}

HalfPiScalar::HalfPiScalar(const Rational& q) {
  if (q != 0) terms_.emplace(0, q);
}

HalfPiScalar HalfPiScalar::monomial(const Rational& c, int half_power) {
  HalfPiScalar r;
  if (c != 0) r.terms_.emplace(half_power, c);
  return r;
}

void HalfPiScalar::add_term(int h, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(h);
  if (it == terms_.end()) {
    terms_.emplace(h, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

HalfPiScalar& HalfPiScalar::operator+=(const HalfPiScalar& o) {
  for (const auto& [h, c] : o.terms_) add_term(h, c);
  return *this;
}

HalfPiScalar& HalfPiScalar::operator*=(const HalfPiScalar& o) {
  HalfPiScalar r;
  for (const auto& [ha, ca] : terms_)
    for (const auto& [hb, cb] : o.terms_) r.add_term(ha + hb, ca * cb);
  terms_ = std::move(r.terms_);
  return *this;
}

HalfPiScalar& HalfPiScalar::operator/=(const HalfPiScalar& o) {
  if (o.terms_.size() != 1) throw DivisionError("HalfPiScalar divisor must be a single term");
  const auto& [h, c] = *o.terms_.begin();
  Terms out;
  for (const auto& [hh, cc] : terms_) out.emplace(hh - h, cc / c);
  terms_ = std::move(out);
  return *this;
}

PiLambdaScalar HalfPiScalar::to_pi_lambda() const {
  PiLambdaScalar r;
  for (const auto& [h, c] : terms_) {
    if (h % 2 != 0) throw ConsistencyError("half-integer power of pi did not cancel: " + str());
    r += PiLambdaScalar::monomial(c, h / 2, 0);
  }
  return r;
}

std::string HalfPiScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [h, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (h != 0) os << "*pi^(" << h << "/2)";
  }
  return os.str();
}

HalfPiScalar gamma_half(long k) {
  if (k <= 0) throw DomainError("gamma_half needs k >= 1");
  if (k % 2 == 0) return HalfPiScalar(Rational(factorial(k / 2 - 1)));
  // Gamma(1/2) = sqrt(pi), Gamma(x + 1) = x Gamma(x)
  Rational c = 1;
  for (long j = 1; j < k; j += 2) c *= make_rational(j, 2);
  return HalfPiScalar::monomial(c, 1);
}

}  // namespace klk
