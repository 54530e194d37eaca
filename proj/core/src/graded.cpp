#include "klk/graded.hpp"

#include <sstream>

#include "klk/errors.hpp"

namespace klk {

ScalarPoly to_scalar_poly(const GradedPoly& p) {
  ScalarPoly r;
  for (const auto& [k, c] : p.terms()) r.add(k.first, k.second, Scalar(c));
  return r;
}

std::string poly_str(const GradedPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (k.first) os << "*s^" << k.first;
    if (k.second) os << "*t^" << k.second;
  }
  return os.str();
}

GradedQuotient::GradedQuotient(std::vector<GradedPoly> relations, int top,
                               const std::function<int(int)>& expected_dim)
    : top_(top) {
  for (const auto& r : relations)
    if (!r.is_homogeneous()) throw DomainError("relations must be homogeneous");
  for (int k = 0; k <= top + 2; ++k) {
    int na = k / 2 + 1;
    // columns ordered by descending s-power
    auto col = [&](int a) { return static_cast<std::size_t>(na - 1 - a); };
    RMatrix rows;
    for (const auto& r : relations) {
      int d = r.max_degree();
      if (d < 0 || d > k) continue;
      for (int a = 0; 2 * a <= k - d; ++a) {
        GradedPoly mult = r * GradedPoly::monomial(a, k - d - 2 * a);
        std::vector<Rational> row(na, Rational(0));
        for (const auto& [key, c] : mult.terms()) row[col(key.first)] = c;
        rows.push_back(std::move(row));
      }
    }
    std::vector<std::size_t> pivots;
    if (!rows.empty()) pivots = rref(rows);
    std::vector<bool> is_pivot(na, false);
    for (auto p : pivots) is_pivot[p] = true;
    Degree deg;
    for (int a = 0; a < na; ++a)
      if (!is_pivot[col(a)]) deg.basis.push_back(a);
    int dim = static_cast<int>(deg.basis.size());
    if (dim != expected_dim(k))
      throw ConsistencyError("quotient dimension " + std::to_string(dim) + " in degree " + std::to_string(k) +
                             " does not match expected " + std::to_string(expected_dim(k)));
    if (k > top) {
      if (dim != 0) throw ConsistencyError("quotient does not vanish above the top degree");
      continue;
    }
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < deg.basis.size(); ++i) pos[deg.basis[i]] = i;
    for (int a = 0; a < na; ++a) {
      std::vector<Rational> v(dim, Rational(0));
      if (!is_pivot[col(a)]) {
        v[pos[a]] = 1;
      } else {
        // pivot row: x_a + sum_{free b} r_b x_b = 0
        for (std::size_t r = 0; r < pivots.size(); ++r) {
          if (pivots[r] != col(a)) continue;
          for (int b : deg.basis) v[pos[b]] = -rows[r][col(b)];
        }
      }
      deg.reduction.emplace(a, std::move(v));
    }
    degrees_.push_back(std::move(deg));
  }
}

const GradedQuotient::Degree& GradedQuotient::degree(int k) const {
  if (k < 0 || k > top_) throw DegreeError("degree outside the quotient");
  return degrees_[k];
}

}  // namespace klk
