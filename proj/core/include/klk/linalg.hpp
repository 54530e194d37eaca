#pragma once

#include <vector>

#include "klk/rational.hpp"
#include "klk/scalar.hpp"

namespace klk {

using RMatrix = std::vector<std::vector<Rational>>;
using SMatrix = std::vector<std::vector<Scalar>>;

RMatrix zero_matrix(std::size_t rows, std::size_t cols);
RMatrix identity_matrix(std::size_t n);

// Reduced row echelon form in place; returns pivot columns in order.
std::vector<std::size_t> rref(RMatrix& m);
std::size_t rank(RMatrix m);
Rational determinant(RMatrix m);
// Throws ConsistencyError when singular.
RMatrix inverse(const RMatrix& m);
RMatrix multiply(const RMatrix& a, const RMatrix& b);

// Incremental rank over the rationals for large sparse families.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}
  // Returns true when the vector enlarged the span.
  bool insert(std::vector<Rational> v);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

// Gauss-Jordan over PiLambdaScalar. Every pivot must be invertible in the
// ring, i.e. a rational times a power of pi; otherwise DivisionError.
SMatrix inverse(const SMatrix& m);
SMatrix multiply(const SMatrix& a, const SMatrix& b);

}  // namespace klk
