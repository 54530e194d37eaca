#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "klk/rational.hpp"

namespace klk {

using Vec = std::vector<Rational>;

// Element of Alt^p(V) (x) Alt^q(V), V = R^{2n} with basis e_1..e_{2n}
// where e_{2i} = J e_{2i-1}. Stored as coefficients of
// theta_I (x) theta_J over strictly increasing index sets, kept as bit masks
// (bit a-1 stands for e_a). Evaluation on basis tuples returns the
// coefficient, so theta_1 ^ theta_2 (e_1, e_2) = 1.
class DoubleForm {
 public:
  using Mask = std::uint32_t;
  using Key = std::pair<Mask, Mask>;

  DoubleForm() = default;  // zero (0,0) form on the zero space
  DoubleForm(int n, int p, int q);
  static DoubleForm one(int n);  // the (0,0) form 1

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  const std::map<Key, Rational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  // Index lists are 1-based and strictly increasing.
  Rational get(const std::vector<int>& I, const std::vector<int>& J) const;
  void set(const std::vector<int>& I, const std::vector<int>& J, const Rational& c);
  Rational get(Mask I, Mask J) const;
  void add(Mask I, Mask J, const Rational& c);

  // Value on basis vectors given by arbitrary 1-based index lists.
  Rational on_basis(const std::vector<int>& xs, const std::vector<int>& ys) const;
  // Multilinear alternating evaluation on arbitrary vectors of length 2n.
  Rational evaluate(const std::vector<Vec>& X, const std::vector<Vec>& Y) const;

  DoubleForm& operator+=(const DoubleForm& o);
  DoubleForm& operator-=(const DoubleForm& o);
  DoubleForm& operator*=(const Rational& c);
  friend DoubleForm operator+(DoubleForm a, const DoubleForm& b) { return a += b; }
  friend DoubleForm operator-(DoubleForm a, const DoubleForm& b) { return a -= b; }
  friend DoubleForm operator*(const Rational& c, DoubleForm a) { return a *= c; }
  friend bool operator==(const DoubleForm& a, const DoubleForm& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.q_ == b.q_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const DoubleForm& a, const DoubleForm& b) { return !(a == b); }

  // Coefficients as a dense vector indexed by (I, J) over all increasing
  // p- and q-subsets, for rank computations.
  std::vector<Rational> dense() const;

 private:
  void check_key(Mask I, Mask J) const;
  int n_ = 0, p_ = 0, q_ = 0;
  std::map<Key, Rational> entries_;
};

std::vector<int> mask_to_indices(DoubleForm::Mask m);
DoubleForm::Mask indices_to_mask(const std::vector<int>& idx);
// All masks with k bits among the low `bits` bits, increasing numerically.
std::vector<DoubleForm::Mask> subsets(int bits, int k);

DoubleForm wedge(const DoubleForm& a, const DoubleForm& b);
DoubleForm wedge_power(const DoubleForm& a, int k);
// sum_i a(..., e_i; ..., e_i)
DoubleForm contract(const DoubleForm& a);
// a'(X_1..X_{p+1}; Y_2..Y_q) = sum_j (-1)^(j+1) a(X_1..^X_j..X_{p+1}; X_j, Y_2..Y_q)
DoubleForm prime(const DoubleForm& a);
DoubleForm vee(const DoubleForm& a);
// derivative of the e^{it} rotation on the second slot group
DoubleForm j_rotate(const DoubleForm& a);
// a(JX_1, ..., JX_p; Y) for group 0, a(X; JY_1, ..., JY_q) for group 1
DoubleForm j_pullback(const DoubleForm& a, int group);
// a(e_1..e_2n; e_1..e_2n) / (2n)! for a (2n, 2n) form
Rational top_coefficient(const DoubleForm& a);

// J e_a as (index, sign), 1-based.
std::pair<int, int> j_basis(int a);
Vec j_apply(const Vec& v);

enum class CanonicalKind { g, Jg, F, Fvee, G, csf };
DoubleForm canonical_form(int n, CanonicalKind kind, const Rational& lambda0 = 0);

}  // namespace klk
