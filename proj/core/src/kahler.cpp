#include "klk/kahler.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "klk/errors.hpp"

namespace klk {

namespace {

RMatrix j_matrix(int m) {
  RMatrix J = zero_matrix(2 * m, 2 * m);
  for (int a = 1; a <= 2 * m; ++a) {
    auto [b, s] = j_basis(a);
    J[b - 1][a - 1] = s;
  }
  return J;
}

RMatrix transpose(const RMatrix& a) {
  RMatrix t = zero_matrix(a.empty() ? 0 : a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

bool is_symmetric(const RMatrix& a) { return a == transpose(a); }

RMatrix negate(RMatrix a) {
  for (auto& row : a)
    for (auto& x : row) x = -x;
  return a;
}

ComplexForm cwedge(const ComplexForm& a, const ComplexForm& b) {
  return {wedge(a.re, b.re) - wedge(a.im, b.im), wedge(a.re, b.im) + wedge(a.im, b.re)};
}

}  // namespace

SymBilinear::SymBilinear(int m_, RMatrix mat) : m(m_), matrix(std::move(mat)) {
  if (static_cast<int>(matrix.size()) != 2 * m) throw DimensionError("sff matrix size mismatch");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != 2 * m) throw DimensionError("sff matrix size mismatch");
  if (!is_symmetric(matrix)) throw InvalidSffError("sff matrix is not symmetric");
}

DoubleForm SymBilinear::as_form() const {
  DoubleForm f(m, 1, 1);
  for (int a = 0; a < 2 * m; ++a)
    for (int b = 0; b < 2 * m; ++b) f.add(DoubleForm::Mask{1} << a, DoubleForm::Mask{1} << b, matrix[a][b]);
  return f;
}

std::pair<SymBilinear, SymBilinear> complex_sff(const RMatrix& A, const RMatrix& B) {
  int m = static_cast<int>(A.size());
  RMatrix L = zero_matrix(2 * m, 2 * m), Li = zero_matrix(2 * m, 2 * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      L[2 * a][2 * b] = A[a][b];
      L[2 * a + 1][2 * b + 1] = -A[a][b];
      L[2 * a][2 * b + 1] = -B[a][b];
      L[2 * a + 1][2 * b] = -B[a][b];
      Li[2 * a][2 * b] = B[a][b];
      Li[2 * a + 1][2 * b + 1] = -B[a][b];
      Li[2 * a][2 * b + 1] = A[a][b];
      Li[2 * a + 1][2 * b] = A[a][b];
    }
  return {SymBilinear(m, L), SymBilinear(m, Li)};
}

std::string KahlerTensor::check(const DoubleForm& R) {
  if (R.p() != 2 || R.q() != 2) return "bidegree is not (2,2)";
  if (vee(R) != R) return "not symmetric (R^vee != R)";
  if (!prime(R).is_zero()) return "Bianchi identity fails (R' != 0)";
  if (j_pullback(R, 0) != R) return "R(JX,JY;Z,W) != R(X,Y;Z,W)";
  if (j_pullback(R, 1) != R) return "R(X,Y;JZ,JW) != R(X,Y;Z,W)";
  return {};
}

KahlerTensor::KahlerTensor(DoubleForm form) : form_(std::move(form)) {
  auto why = check(form_);
  if (!why.empty()) throw InvalidSffError("not a Kaehler curvature tensor: " + why);
}

std::string check_sff_pair(const SymBilinear& re, const SymBilinear& im) {
  if (re.m != im.m) return "pair has mismatched dimensions";
  RMatrix J = j_matrix(re.m);
  // complex bilinearity forces l(JX, JY) = -l(X, Y)
  if (multiply(transpose(J), multiply(re.matrix, J)) != negate(re.matrix))
    return "real part is not J-anti-invariant";
  RMatrix LJ = multiply(re.matrix, J);
  if (im.matrix != negate(LJ) && im.matrix != LJ)
    return "imaginary part is not l(X, JY) up to sign";
  return {};
}

KahlerTensor gauss_from_sff(int m, const std::vector<SymBilinear>& sffs) {
  if (m < 1) throw DomainError("m must be >= 1");
  if (sffs.size() % 2 != 0) throw InvalidSffError("sff list must hold real/imaginary pairs");
  DoubleForm R(m, 2, 2);
  for (std::size_t r = 0; r < sffs.size(); r += 2) {
    if (sffs[r].m != m || sffs[r + 1].m != m) throw DimensionError("sff on the wrong space");
    auto why = check_sff_pair(sffs[r], sffs[r + 1]);
    if (!why.empty()) throw InvalidSffError("sff pair " + std::to_string(r / 2) + ": " + why);
    for (std::size_t k = r; k < r + 2; ++k) {
      DoubleForm l = sffs[k].as_form();
      R += wedge(l, l);
    }
  }
  R *= make_rational(1, 2);
  return KahlerTensor(std::move(R));
}

int embedded_span_dim(int m, int sample_count, std::uint64_t seed) {
  if (m < 1) throw DomainError("m must be >= 1");
  // complex symmetric basis: theta_i . theta_j and i * theta_i . theta_j
  std::vector<std::pair<RMatrix, RMatrix>> basis;
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b)
      for (int imag = 0; imag < 2; ++imag) {
        RMatrix E = zero_matrix(m, m);
        E[a][b] = E[b][a] = 1;
        if (imag) basis.emplace_back(zero_matrix(m, m), E);
        else basis.emplace_back(E, zero_matrix(m, m));
      }
  auto curvature = [m](const RMatrix& A, const RMatrix& B) {
    auto [re, im] = complex_sff(A, B);
    return gauss_from_sff(m, {re, im}).form().dense();
  };
  auto add = [](RMatrix x, const RMatrix& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) x[i][j] += y[i][j];
    return x;
  };
  std::size_t N = DoubleForm(m, 2, 2).dense().size();
  RowSpace span(N);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    span.insert(curvature(basis[i].first, basis[i].second));
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      span.insert(curvature(add(basis[i].first, basis[j].first), add(basis[i].second, basis[j].second)));
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < sample_count; ++s) {
    RMatrix A = zero_matrix(m, m), B = zero_matrix(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b) {
        A[a][b] = A[b][a] = static_cast<long>(rng() % 7) - 3;
        B[a][b] = B[b][a] = static_cast<long>(rng() % 7) - 3;
      }
    span.insert(curvature(A, B));
  }
  return static_cast<int>(span.rank());
}

ChernResult chern_scaled(const KahlerTensor& Rt, int q) {
  const DoubleForm& R = Rt.form();
  int n = R.n(), N = 2 * n;
  if (q < 0 || q > n) throw DomainError("Chern degree out of range");
  using Mask = DoubleForm::Mask;
  auto pairs = subsets(N, 2);
  // Xi_ij = R(.,.; e_{2i-1}, e_{2j-1}) - i R(.,.; e_{2i-1}, e_{2j})
  std::vector<std::vector<ComplexForm>> xi(n, std::vector<ComplexForm>(n, {DoubleForm(n, 2, 0), DoubleForm(n, 2, 0)}));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      for (Mask I : pairs) {
        auto idx = mask_to_indices(I);
        xi[i - 1][j - 1].re.add(I, 0, R.on_basis(idx, {2 * i - 1, 2 * j - 1}));
        xi[i - 1][j - 1].im.add(I, 0, -R.on_basis(idx, {2 * i - 1, 2 * j}));
      }
    }
  ChernResult res;
  res.q = q;
  res.elementary = {DoubleForm(n, 2 * q, 0), DoubleForm(n, 2 * q, 0)};
  for (Mask S : subsets(n, q)) {
    std::vector<int> rows;
    for (Mask b = S; b; b &= b - 1) rows.push_back(std::countr_zero(b));
    std::vector<int> perm = rows;
    do {
      int inv = 0;
      for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
          if (perm[a] > perm[b]) ++inv;
      ComplexForm term{DoubleForm::one(n), DoubleForm(n, 0, 0)};
      for (std::size_t a = 0; a < rows.size(); ++a) term = cwedge(term, xi[rows[a]][perm[a]]);
      if (inv & 1) {
        term.re *= -1;
        term.im *= -1;
      }
      res.elementary.re += term.re;
      res.elementary.im += term.im;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  // (2 pi)^q gamma_q = (-1/i)^q e_q = i^q e_q
  DoubleForm re = res.elementary.re, im = res.elementary.im;
  switch (q % 4) {
    case 0: break;
    case 1: std::swap(re, im); re *= -1; break;
    case 2: re *= -1; im *= -1; break;
    case 3: std::swap(re, im); im *= -1; break;
  }
  res.scaled = re;
  Mask full = (Mask{1} << N) - 1;
  DoubleForm F = canonical_form(n, CanonicalKind::F);
  res.lhs = wedge(re, wedge_power(F, n - q)).get(full, 0);
  DoubleForm Rq = wedge_power(R, q);
  DoubleForm c = Rq;
  for (int k = 0; k < 2 * q; ++k) c = contract(c);
  res.via_contraction = Rational(factorial(n - q)) / Rational(factorial(q) * factorial(2 * q)) * c.get(0, 0);
  DoubleForm g = canonical_form(n, CanonicalKind::g);
  res.rhs = Rational(factorial(n - q)) / Rational(factorial(q) * factorial(2 * n - 2 * q)) *
            wedge(Rq, wedge_power(g, 2 * (n - q))).get(full, full);
  res.equal = im.is_zero() && res.lhs == res.rhs && res.via_contraction == res.rhs;
  return res;
}

}  // namespace klk
