#include "klk/double_form.hpp"

#include <algorithm>
#include <bit>

#include "klk/errors.hpp"
#include "klk/linalg.hpp"

namespace klk {

using Mask = DoubleForm::Mask;

namespace {

int popcount(Mask m) { return std::popcount(m); }

// Parity of the permutation sorting (A, B) into increasing order.
int shuffle_parity(Mask A, Mask B) {
  int inv = 0;
  for (Mask b = B; b; b &= b - 1) {
    int bit = std::countr_zero(b);
    inv += popcount(A >> (bit + 1));
  }
  return inv & 1;
}

// Sorts 1-based indices; returns 0 on repetition, else the sign.
int sort_with_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
      if (v[j - 1] == v[j]) return 0;
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] == v[i]) return 0;
  return sign;
}

}  // namespace

std::vector<int> mask_to_indices(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

Mask indices_to_mask(const std::vector<int>& idx) {
  Mask m = 0;
  for (int a : idx) m |= Mask{1} << (a - 1);
  return m;
}

std::vector<Mask> subsets(int bits, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > bits) return out;
  Mask limit = Mask{1} << bits;
  for (Mask m = 0; m < limit; ++m)
    if (popcount(m) == k) out.push_back(m);
  return out;
}

std::pair<int, int> j_basis(int a) {
  // J e_{2i-1} = e_{2i}, J e_{2i} = -e_{2i-1}
  return (a % 2 == 1) ? std::pair{a + 1, 1} : std::pair{a - 1, -1};
}

Vec j_apply(const Vec& v) {
  Vec out(v.size());
  for (std::size_t a = 1; a <= v.size(); ++a) {
    auto [b, s] = j_basis(static_cast<int>(a));
    out[b - 1] = s * v[a - 1];
  }
  return out;
}

DoubleForm::DoubleForm(int n, int p, int q) : n_(n), p_(p), q_(q) {
  if (n < 0 || n > 15) throw DomainError("complex dimension out of range");
  if (p < 0 || q < 0 || p > 2 * n || q > 2 * n) throw DegreeError("bidegree out of range");
}

DoubleForm DoubleForm::one(int n) {
  DoubleForm f(n, 0, 0);
  f.add(0, 0, 1);
  return f;
}

void DoubleForm::check_key(Mask I, Mask J) const {
  Mask full = (Mask{1} << dim()) - 1;
  if ((I & ~full) || (J & ~full) || popcount(I) != p_ || popcount(J) != q_)
    throw ArityError("index set does not match the form's bidegree");
}

Rational DoubleForm::get(Mask I, Mask J) const {
  auto it = entries_.find(Key{I, J});
  return it == entries_.end() ? Rational(0) : it->second;
}

void DoubleForm::add(Mask I, Mask J, const Rational& c) {
  if (c == 0) return;
  check_key(I, J);
  auto [it, inserted] = entries_.emplace(Key{I, J}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) entries_.erase(it);
  }
}

Rational DoubleForm::get(const std::vector<int>& I, const std::vector<int>& J) const {
  return get(indices_to_mask(I), indices_to_mask(J));
}

void DoubleForm::set(const std::vector<int>& I, const std::vector<int>& J, const Rational& c) {
  for (std::size_t i = 1; i < I.size(); ++i)
    if (I[i - 1] >= I[i]) throw ArityError("indices must be strictly increasing");
  for (std::size_t i = 1; i < J.size(); ++i)
    if (J[i - 1] >= J[i]) throw ArityError("indices must be strictly increasing");
  for (int a : I)
    if (a < 1 || a > dim()) throw ArityError("index out of range");
  for (int a : J)
    if (a < 1 || a > dim()) throw ArityError("index out of range");
  Mask mi = indices_to_mask(I), mj = indices_to_mask(J);
  check_key(mi, mj);
  if (c == 0) entries_.erase(Key{mi, mj});
  else entries_[Key{mi, mj}] = c;
}

Rational DoubleForm::on_basis(const std::vector<int>& xs, const std::vector<int>& ys) const {
  if (static_cast<int>(xs.size()) != p_ || static_cast<int>(ys.size()) != q_)
    throw ArityError("argument count does not match bidegree");
  std::vector<int> a = xs, b = ys;
  for (int v : a)
    if (v < 1 || v > dim()) throw ArityError("basis index out of range");
  for (int v : b)
    if (v < 1 || v > dim()) throw ArityError("basis index out of range");
  int s = sort_with_sign(a) * sort_with_sign(b);
  if (s == 0) return 0;
  return s * get(indices_to_mask(a), indices_to_mask(b));
}

Rational DoubleForm::evaluate(const std::vector<Vec>& X, const std::vector<Vec>& Y) const {
  if (static_cast<int>(X.size()) != p_ || static_cast<int>(Y.size()) != q_)
    throw ArityError("argument count does not match bidegree");
  for (const auto& v : X)
    if (static_cast<int>(v.size()) != dim()) throw ArityError("vector length mismatch");
  for (const auto& v : Y)
    if (static_cast<int>(v.size()) != dim()) throw ArityError("vector length mismatch");
  auto minor = [](const std::vector<Vec>& vs, Mask rows) {
    auto idx = mask_to_indices(rows);
    RMatrix m = zero_matrix(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < vs.size(); ++c) m[r][c] = vs[c][idx[r] - 1];
    return determinant(m);
  };
  Rational total = 0;
  for (const auto& [k, c] : entries_) {
    Rational dx = minor(X, k.first);
    if (dx == 0) continue;
    total += c * dx * minor(Y, k.second);
  }
  return total;
}

DoubleForm& DoubleForm::operator+=(const DoubleForm& o) {
  if (o.n_ != n_ || o.p_ != p_ || o.q_ != q_) throw DimensionError("adding forms of different type");
  for (const auto& [k, c] : o.entries_) add(k.first, k.second, c);
  return *this;
}

DoubleForm& DoubleForm::operator-=(const DoubleForm& o) {
  if (o.n_ != n_ || o.p_ != p_ || o.q_ != q_) throw DimensionError("subtracting forms of different type");
  for (const auto& [k, c] : o.entries_) add(k.first, k.second, -c);
  return *this;
}

DoubleForm& DoubleForm::operator*=(const Rational& c) {
  if (c == 0) entries_.clear();
  for (auto& [k, v] : entries_) v *= c;
  return *this;
}

std::vector<Rational> DoubleForm::dense() const {
  auto rows = subsets(dim(), p_), cols = subsets(dim(), q_);
  std::vector<Rational> out;
  out.reserve(rows.size() * cols.size());
  for (Mask I : rows)
    for (Mask J : cols) out.push_back(get(I, J));
  return out;
}

DoubleForm wedge(const DoubleForm& a, const DoubleForm& b) {
  if (a.n() != b.n()) throw DimensionError("wedge of forms on different spaces");
  int N = a.dim();
  int p = a.p() + b.p(), q = a.q() + b.q();
  if (p > N || q > N) return DoubleForm(a.n(), std::min(p, N), std::min(q, N));
  DoubleForm r(a.n(), p, q);
  for (const auto& [ka, ca] : a.entries())
    for (const auto& [kb, cb] : b.entries()) {
      if ((ka.first & kb.first) || (ka.second & kb.second)) continue;
      int par = shuffle_parity(ka.first, kb.first) ^ shuffle_parity(ka.second, kb.second);
      Rational c = ca * cb;
      if (par) c = -c;
      r.add(ka.first | kb.first, ka.second | kb.second, c);
    }
  return r;
}

DoubleForm wedge_power(const DoubleForm& a, int k) {
  if (k < 0) throw DomainError("negative wedge power");
  DoubleForm r = DoubleForm::one(a.n());
  for (int i = 0; i < k; ++i) r = wedge(r, a);
  return r;
}

DoubleForm contract(const DoubleForm& a) {
  if (a.p() == 0 || a.q() == 0) throw DegreeError("contraction needs p >= 1 and q >= 1");
  DoubleForm r(a.n(), a.p() - 1, a.q() - 1);
  for (const auto& [k, c] : a.entries()) {
    for (Mask common = k.first & k.second; common; common &= common - 1) {
      int bit = std::countr_zero(common);
      int moves = popcount(k.first >> (bit + 1)) + popcount(k.second >> (bit + 1));
      Mask m = Mask{1} << bit;
      r.add(k.first & ~m, k.second & ~m, (moves & 1) ? Rational(-c) : c);
    }
  }
  return r;
}

DoubleForm prime(const DoubleForm& a) {
  if (a.q() == 0) throw DegreeError("prime needs q >= 1");
  int N = a.dim();
  if (a.p() + 1 > N) return DoubleForm(a.n(), N, a.q() - 1);
  DoubleForm r(a.n(), a.p() + 1, a.q() - 1);
  for (const auto& [k, c] : a.entries()) {
    for (Mask bs = k.second; bs; bs &= bs - 1) {
      int bit = std::countr_zero(bs);
      Mask m = Mask{1} << bit;
      if (k.first & m) continue;
      Mask below = m - 1;
      int par = (popcount(k.second & below) + popcount(k.first & below)) & 1;
      r.add(k.first | m, k.second & ~m, par ? Rational(-c) : c);
    }
  }
  return r;
}

DoubleForm vee(const DoubleForm& a) {
  DoubleForm r(a.n(), a.q(), a.p());
  for (const auto& [k, c] : a.entries()) r.add(k.second, k.first, c);
  return r;
}

namespace {

// theta_{2i-1} o J = -theta_{2i}, theta_{2i} o J = theta_{2i-1} (1-based)
std::pair<int, int> covector_j(int bit) {
  return (bit % 2 == 0) ? std::pair{bit + 1, -1} : std::pair{bit - 1, 1};
}

}  // namespace

DoubleForm j_rotate(const DoubleForm& a) {
  DoubleForm r(a.n(), a.p(), a.q());
  for (const auto& [k, c] : a.entries()) {
    for (Mask bs = k.second; bs; bs &= bs - 1) {
      int bit = std::countr_zero(bs);
      auto [to, s] = covector_j(bit);
      Mask mt = Mask{1} << to;
      if (k.second & mt) continue;
      // partner is adjacent, so the sorted position is unchanged
      r.add(k.first, (k.second & ~(Mask{1} << bit)) | mt, s > 0 ? c : Rational(-c));
    }
  }
  return r;
}

DoubleForm j_pullback(const DoubleForm& a, int group) {
  DoubleForm r(a.n(), a.p(), a.q());
  for (const auto& [k, c] : a.entries()) {
    Mask src = group == 0 ? k.first : k.second;
    std::vector<int> mapped;
    int sign = 1;
    for (Mask bs = src; bs; bs &= bs - 1) {
      auto [to, s] = covector_j(std::countr_zero(bs));
      mapped.push_back(to + 1);
      sign *= s;
    }
    sign *= sort_with_sign(mapped);
    Mask dst = indices_to_mask(mapped);
    Rational v = sign > 0 ? c : Rational(-c);
    if (group == 0) r.add(dst, k.second, v);
    else r.add(k.first, dst, v);
  }
  return r;
}

Rational top_coefficient(const DoubleForm& a) {
  if (a.p() != a.dim() || a.q() != a.dim()) throw DegreeError("top coefficient needs bidegree (2n,2n)");
  Mask full = (Mask{1} << a.dim()) - 1;
  return a.get(full, full) / Rational(factorial(a.dim()));
}

DoubleForm canonical_form(int n, CanonicalKind kind, const Rational& lambda0) {
  if (n < 1) throw DomainError("canonical forms need n >= 1");
  int N = 2 * n;
  auto g = [](int a, int b) { return a == b ? 1 : 0; };
  // g(J e_a; e_b)
  auto gj = [](int a, int b) {
    auto [ja, s] = j_basis(a);
    return ja == b ? s : 0;
  };
  switch (kind) {
    case CanonicalKind::g: {
      DoubleForm f(n, 1, 1);
      for (int a = 1; a <= N; ++a) f.set({a}, {a}, 1);
      return f;
    }
    case CanonicalKind::Jg: {
      // Jg(X;Y) = g(X;JY)
      DoubleForm f(n, 1, 1);
      for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
          auto [jb, s] = j_basis(b);
          if (jb == a) f.set({a}, {b}, s);
        }
      return f;
    }
    case CanonicalKind::F:
    case CanonicalKind::Fvee: {
      DoubleForm f(n, 2, 0);
      for (int a = 1; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b)
          if (gj(a, b) != 0) f.set({a, b}, {}, gj(a, b));
      return kind == CanonicalKind::F ? f : vee(f);
    }
    case CanonicalKind::G:
    case CanonicalKind::csf: {
      DoubleForm f(n, 2, 2);
      for (int w = 1; w <= N; ++w)
        for (int x = w + 1; x <= N; ++x)
          for (int y = 1; y <= N; ++y)
            for (int z = y + 1; z <= N; ++z) {
              int v = g(w, y) * g(x, z) - g(w, z) * g(x, y) + gj(w, y) * gj(x, z) -
                      gj(w, z) * gj(x, y) + 2 * gj(w, x) * gj(y, z);
              if (v != 0) f.set({w, x}, {y, z}, v);
            }
      if (kind == CanonicalKind::csf) f *= lambda0;
      return f;
    }
  }
  throw DomainError("unknown canonical form");
}

}  // namespace klk
