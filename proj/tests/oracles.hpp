// Independent reference computations. None of these call the library
// routine they are used to check.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "klk/double_form.hpp"
#include "klk/rational.hpp"
#include "klk/series.hpp"

namespace oracle {

using klk::Rational;

inline int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// Value of a stored form on basis vectors with 1-based indices, by sorting.
inline Rational lookup(const klk::DoubleForm& f, std::vector<int> xs, std::vector<int> ys) {
  auto sort_sign = [](std::vector<int>& v) {
    int s = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
        if (v[j] > v[j + 1]) {
          std::swap(v[j], v[j + 1]);
          s = -s;
        }
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] == v[i + 1]) return 0;
    return s;
  };
  int s = sort_sign(xs) * sort_sign(ys);
  if (s == 0) return 0;
  Rational c = f.get(xs, ys);
  return s * c;
}

// (a ^ b)(xs; ys) from the permutation-sum definition of the product of
// alternating forms in each slot group.
inline Rational wedge_value(const klk::DoubleForm& a, const klk::DoubleForm& b, const std::vector<int>& xs,
                            const std::vector<int>& ys) {
  int pa = a.p(), pb = b.p(), qa = a.q(), qb = b.q();
  std::vector<int> sx(xs.size()), sy(ys.size());
  std::iota(sx.begin(), sx.end(), 0);
  Rational total = 0;
  do {
    std::iota(sy.begin(), sy.end(), 0);
    do {
      std::vector<int> xa, xb, ya, yb;
      for (int i = 0; i < pa; ++i) xa.push_back(xs[sx[i]]);
      for (int i = 0; i < pb; ++i) xb.push_back(xs[sx[pa + i]]);
      for (int i = 0; i < qa; ++i) ya.push_back(ys[sy[i]]);
      for (int i = 0; i < qb; ++i) yb.push_back(ys[sy[qa + i]]);
      Rational va = lookup(a, xa, ya);
      if (va == 0) continue;
      total += perm_sign(sx) * perm_sign(sy) * va * lookup(b, xb, yb);
    } while (std::next_permutation(sy.begin(), sy.end()));
  } while (std::next_permutation(sx.begin(), sx.end()));
  Rational norm = Rational(klk::factorial(pa) * klk::factorial(pb) * klk::factorial(qa) * klk::factorial(qb));
  return total / norm;
}

// Full product computed entry by entry with wedge_value.
inline klk::DoubleForm wedge(const klk::DoubleForm& a, const klk::DoubleForm& b) {
  klk::DoubleForm r(a.n(), a.p() + b.p(), a.q() + b.q());
  for (auto I : klk::subsets(2 * a.n(), r.p()))
    for (auto J : klk::subsets(2 * a.n(), r.q())) {
      auto xs = klk::mask_to_indices(I), ys = klk::mask_to_indices(J);
      Rational v = wedge_value(a, b, xs, ys);
      if (v != 0) r.set(xs, ys, v);
    }
  return r;
}

inline klk::DoubleForm wedge_power(const klk::DoubleForm& a, int k) {
  klk::DoubleForm r = klk::DoubleForm::one(a.n());
  for (int i = 0; i < k; ++i) r = oracle::wedge(r, a);
  return r;
}

// C(a)(xs; ys) = sum_c a(xs, e_c; ys, e_c)
inline klk::DoubleForm contract(const klk::DoubleForm& a) {
  klk::DoubleForm r(a.n(), a.p() - 1, a.q() - 1);
  for (auto I : klk::subsets(2 * a.n(), r.p()))
    for (auto J : klk::subsets(2 * a.n(), r.q())) {
      auto xs = klk::mask_to_indices(I), ys = klk::mask_to_indices(J);
      Rational v = 0;
      for (int c = 1; c <= 2 * a.n(); ++c) {
        std::vector<int> x2 = xs, y2 = ys;
        x2.push_back(c);
        y2.push_back(c);
        v += lookup(a, x2, y2);
      }
      if (v != 0) r.set(xs, ys, v);
    }
  return r;
}

// [xi^i eta^j] of xi^m eta^p prod (1 - a xi - b eta)^e, from the Leibniz
// rule applied to explicit partial derivatives of each factor.
inline Rational series_coeff(const std::vector<klk::AffineFactor>& fs, int m, int p, int i, int j) {
  if (i < m || j < p) return 0;
  std::function<Rational(std::size_t, int, int)> rec = [&](std::size_t k, int ri, int rj) -> Rational {
    if (k == fs.size()) return (ri == 0 && rj == 0) ? Rational(1) : Rational(0);
    const auto& f = fs[k];
    Rational sum = 0;
    for (int di = 0; di <= ri; ++di)
      for (int dj = 0; dj <= rj; ++dj) {
        Rational falling = 1;
        for (int t = 0; t < di + dj; ++t) falling *= f.exponent - t;
        Rational v = falling * klk::power(-f.a, di) * klk::power(-f.b, dj);
        if (v == 0) continue;
        sum += Rational(klk::binomial(ri, di) * klk::binomial(rj, dj)) * v * rec(k + 1, ri - di, rj - dj);
      }
    return sum;
  };
  int I = i - m, J = j - p;
  return rec(0, I, J) / Rational(klk::factorial(I) * klk::factorial(J));
}

// Truncated trivariate series with rational coefficients.
using Tri = std::map<std::tuple<int, int, int>, Rational>;

inline Tri tri_mul(const Tri& a, const Tri& b, int zmax) {
  Tri r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      int z = std::get<2>(ka) + std::get<2>(kb);
      if (z > zmax) continue;
      r[{std::get<0>(ka) + std::get<0>(kb), std::get<1>(ka) + std::get<1>(kb), z}] += ca * cb;
    }
  return r;
}

// [(1 - z)^2 - (1 - 2x)(1 - y) z^2]^{-1} up to z^zmax; keys (x, y, z) powers.
inline Tri catalan_generating_function(int zmax) {
  // 1/(1 - w) with w = 2z - z^2 + (1 - 2x)(1 - y) z^2
  Tri w;
  w[{0, 0, 1}] += 2;
  w[{0, 0, 2}] += -1;
  w[{0, 0, 2}] += 1;
  w[{1, 0, 2}] += -2;
  w[{0, 1, 2}] += -1;
  w[{1, 1, 2}] += 2;
  Tri sum, pw;
  pw[{0, 0, 0}] = 1;
  for (int m = 0; m <= zmax; ++m) {
    for (const auto& [k, c] : pw) sum[k] += c;
    pw = tri_mul(pw, w, zmax);
  }
  return sum;
}

}  // namespace oracle
