#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klk/linalg.hpp"
#include "klk/rational.hpp"
#include "klk/scalar.hpp"

namespace klk {

// Polynomial in s (degree 2) and t (degree 1) with coefficients in C.
template <class C>
class BasicPoly {
 public:
  using Key = std::pair<int, int>;  // (power of s, power of t)

  BasicPoly() = default;
  static BasicPoly monomial(int a, int b, const C& c = C(1L)) {
    BasicPoly p;
    p.add(a, b, c);
    return p;
  }
  static BasicPoly constant(const C& c) { return monomial(0, 0, c); }
  static BasicPoly s() { return monomial(1, 0); }
  static BasicPoly t() { return monomial(0, 1); }

  const std::map<Key, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  C coeff(int a, int b) const {
    auto it = terms_.find(Key{a, b});
    return it == terms_.end() ? C() : it->second;
  }
  void add(int a, int b, const C& c) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
    if (c == C()) return;
    auto [it, inserted] = terms_.emplace(Key{a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == C()) terms_.erase(it);
    }
  }
  // -1 for zero; throws if not homogeneous when `strict`.
  int max_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, 2 * k.first + k.second);
    return d;
  }
  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [k, c] : terms_) {
      int e = 2 * k.first + k.second;
      if (d >= 0 && e != d) return false;
      d = e;
    }
    return true;
  }
  BasicPoly component(int degree) const {
    BasicPoly r;
    for (const auto& [k, c] : terms_)
      if (2 * k.first + k.second == degree) r.terms_.emplace(k, c);
    return r;
  }
  BasicPoly truncated(int max_deg) const {
    BasicPoly r;
    for (const auto& [k, c] : terms_)
      if (2 * k.first + k.second <= max_deg) r.terms_.emplace(k, c);
    return r;
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
  }
  BasicPoly& operator*=(const C& f) {
    if (f == C()) terms_.clear();
    for (auto& [k, c] : terms_) c *= f;
    return *this;
  }
  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    BasicPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  friend BasicPoly operator*(const C& f, BasicPoly a) { return a *= f; }
  friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

  BasicPoly pow(int e) const {
    BasicPoly r = constant(C(1L));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

 private:
  std::map<Key, C> terms_;
};

using GradedPoly = BasicPoly<Rational>;
using ScalarPoly = BasicPoly<Scalar>;

ScalarPoly to_scalar_poly(const GradedPoly& p);
std::string poly_str(const GradedPoly& p);

// Quotient of Q[s,t] by homogeneous relations, reduced degree by degree.
// In each degree the monomials with the highest s-power are used as pivots,
// so the surviving basis prefers low s-powers.
class GradedQuotient {
 public:
  struct Degree {
    std::vector<int> basis;                 // s-powers of basis monomials, ascending
    std::map<int, std::vector<Rational>> reduction;  // s-power -> coords in basis
  };

  // expected_dim(k) is checked for 0 <= k <= top + 2; degrees above `top`
  // must vanish.
  GradedQuotient(std::vector<GradedPoly> relations, int top, const std::function<int(int)>& expected_dim);

  int top() const { return top_; }
  const Degree& degree(int k) const;  // k <= top
  int dim(int k) const { return k < 0 || k > top_ ? 0 : static_cast<int>(degree(k).basis.size()); }

  // Coordinates by degree; degrees above top are dropped.
  template <class C>
  std::map<int, std::vector<C>> reduce(const BasicPoly<C>& p) const {
    std::map<int, std::vector<C>> out;
    for (const auto& [key, c] : p.terms()) {
      int k = 2 * key.first + key.second;
      if (k > top_) continue;
      const auto& d = degree(k);
      auto& v = out[k];
      if (v.empty()) v.assign(d.basis.size(), C());
      const auto& red = d.reduction.at(key.first);
      for (std::size_t i = 0; i < red.size(); ++i)
        if (red[i] != 0) v[i] += C(red[i]) * c;
    }
    return out;
  }
  // Normal form as a polynomial in the basis monomials.
  template <class C>
  BasicPoly<C> normal_form(const BasicPoly<C>& p) const {
    BasicPoly<C> r;
    for (const auto& [k, v] : reduce(p)) {
      const auto& d = degree(k);
      for (std::size_t i = 0; i < v.size(); ++i) r.add(d.basis[i], k - 2 * d.basis[i], v[i]);
    }
    return r;
  }

 private:
  int top_;
  std::vector<Degree> degrees_;
};

}  // namespace klk
