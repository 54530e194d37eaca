#include "klk/weyl.hpp"

#include <mutex>

#include "klk/errors.hpp"

namespace klk {

Scalar ball_volume(long n) {
  if (n < 0) throw DomainError("ball volume needs n >= 0");
  if (n % 2 == 0) return Scalar::monomial(Rational(1) / Rational(factorial(n / 2)), static_cast<int>(n / 2), 0);
  long m = (n - 1) / 2;
  Rational c = Rational(power(Rational(2), 2 * m + 1) * Rational(factorial(m))) / Rational(factorial(2 * m + 1));
  return Scalar::monomial(c, static_cast<int>(m), 0);
}

Scalar sphere_volume(long n) {
  if (n < 0) throw DomainError("sphere volume needs n >= 0");
  return Scalar(n + 1) * ball_volume(n + 1);
}

Scalar d_constant(long n, long k, long l) {
  long r = n - 2 * l - k;
  if (l < 0 || k < 0 || r < 0) return Scalar();
  Scalar denom = Scalar::pi(static_cast<int>(l)) * Scalar(Rational(power(Rational(2), l))) *
                 Scalar(Rational(factorial(l) * factorial(k + 1) * factorial(r))) * ball_volume(r);
  return Scalar(1L) / denom;
}

Scalar d_constant(const Rational& n, const Rational& k, const Rational& l) {
  if (!is_integer(n) || !is_integer(k) || !is_integer(l)) return Scalar();
  return d_constant(to_long(n), to_long(k), to_long(l));
}

Scalar d_constant_first_form(long n, long k, long l) {
  long r = n - 2 * l - k;
  if (l < 0 || k < 0 || r < 0) return Scalar();
  Scalar a = Scalar::pi(static_cast<int>(k)) / (Scalar(Rational(factorial(k + 1))) * ball_volume(k));
  Scalar b = Scalar(gen_binomial(make_rational(k, 2) + l, l) / power(Rational(2), l));
  Scalar c = ball_volume(k + 2 * l) /
             (Scalar::pi(static_cast<int>(k + 2 * l)) * Scalar(Rational(factorial(r))) * ball_volume(r));
  return a * b * c;
}

HalfPiScalar sphere_moment_half(const std::vector<int>& alpha) {
  if (alpha.empty()) throw DomainError("sphere moment needs N >= 1");
  long total = 0;
  for (int a : alpha) {
    if (a < 0) throw DomainError("negative moment exponent");
    if (a % 2) return HalfPiScalar();
    total += a;
  }
  HalfPiScalar num(Rational(2));
  for (int a : alpha) num *= gamma_half(a + 1);
  return num / gamma_half(static_cast<long>(alpha.size()) + total);
}

Scalar sphere_moment(const std::vector<int>& alpha) {
  static std::mutex mu;
  static std::map<std::vector<int>, Scalar> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(alpha);
    if (it != memo.end()) return it->second;
  }
  Scalar v = sphere_moment_half(alpha).to_pi_lambda();
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(alpha, v);
  return v;
}

Scalar cos_sin_integral(long a, long b) {
  if (a < 0 || b < 0) throw DomainError("exponents must be >= 0");
  // B((a+1)/2, (b+1)/2) / 2
  HalfPiScalar v = gamma_half(a + 1) * gamma_half(b + 1) / gamma_half(a + b + 2);
  v = v * HalfPiScalar(make_rational(1, 2));
  return v.to_pi_lambda();
}

Scalar cos_sin_sphere_ratio(long a, long b) {
  return sphere_volume(a + b + 1) / (sphere_volume(a) * sphere_volume(b));
}

void ScalarForm::add(const Scalar& c, const DoubleForm& f) {
  if (f.n() != n_ || f.p() != p_ || f.q() != q_) throw DimensionError("ScalarForm part has the wrong type");
  for (const auto& [key, coeff] : c.terms()) {
    auto it = parts_.find(key);
    if (it == parts_.end()) it = parts_.emplace(key, DoubleForm(n_, p_, q_)).first;
    it->second += coeff * f;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

ScalarForm weyl_integral(int d, int power, const std::vector<SymBilinear>& sffs) {
  if (d < 1 || static_cast<int>(sffs.size()) != 2 * d) throw DimensionError("need 2d second fundamental forms");
  int m = sffs[0].m;
  for (const auto& l : sffs)
    if (l.m != m) throw DimensionError("sffs on different spaces");
  int N = 2 * d;
  std::vector<DoubleForm> ls;
  for (const auto& l : sffs) ls.push_back(l.as_form());
  int deg = std::min(power, 2 * m);
  // H^power as y-monomial -> form
  std::map<std::vector<int>, DoubleForm> cur;
  cur.emplace(std::vector<int>(N, 0), DoubleForm::one(m));
  for (int step = 0; step < power; ++step) {
    std::map<std::vector<int>, DoubleForm> next;
    for (const auto& [mono, f] : cur)
      for (int r = 0; r < N; ++r) {
        DoubleForm w = wedge(f, ls[r]);
        if (w.is_zero()) continue;
        auto key = mono;
        ++key[r];
        auto it = next.find(key);
        if (it == next.end()) next.emplace(key, w);
        else it->second += w;
      }
    cur = std::move(next);
  }
  ScalarForm out(m, deg, deg);
  for (const auto& [mono, f] : cur) {
    if (f.is_zero()) continue;
    Scalar mom = sphere_moment(mono);
    if (!mom.is_zero()) out.add(mom, f);
  }
  return out;
}

WeylCheck weyl_integral_check(int d, int e, const std::vector<SymBilinear>& sffs) {
  if (e < 0) throw DomainError("e must be >= 0");
  ScalarForm lhs = weyl_integral(d, 2 * e, sffs);
  int m = sffs[0].m;
  DoubleForm R(m, 2, 2);
  for (const auto& l : sffs) {
    DoubleForm f = l.as_form();
    R += wedge(f, f);
  }
  R *= make_rational(1, 2);
  DoubleForm Re = wedge_power(R, e);
  Scalar c = Scalar(Rational(power(Rational(2), e + 1))) * sphere_volume(2 * d + 2 * e - 1) / sphere_volume(2 * e);
  ScalarForm rhs(m, Re.p(), Re.q());
  rhs.add(c, Re);
  WeylCheck w{lhs, rhs, false};
  w.equal = lhs == rhs;
  return w;
}

}  // namespace klk
