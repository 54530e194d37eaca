#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "klk/curvature.hpp"
#include "klk/double_form.hpp"
#include "klk/kahler.hpp"
#include "klk/space_forms.hpp"
#include "klk/valuations.hpp"

namespace klk {

// Seeded source for the randomized checks. Values are small so exact
// arithmetic stays cheap.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long integer(long lo, long hi);  // inclusive
  Rational rational(long bound = 5, long max_den = 4);
  Rational nonzero_rational(long bound = 5, long max_den = 4);
  bool coin() { return integer(0, 1) == 1; }

 private:
  std::mt19937_64 eng_;
};

Scalar random_scalar(Rng& rng, int max_terms = 3);
DoubleForm random_double_form(Rng& rng, int n, int p, int q, int max_entries = 6);
GradedPoly random_graded_poly(Rng& rng, int max_degree, int max_terms = 4);
GradedPoly random_homogeneous_poly(Rng& rng, int degree);
RMatrix random_symmetric(Rng& rng, int m);
// Real/imaginary pairs of `pairs` random complex symmetric forms on C^m.
std::vector<SymBilinear> random_sffs(Rng& rng, int m, int pairs);
KahlerTensor random_kahler_tensor(Rng& rng, int m);

FlatValuation random_flat_valuation(Rng& rng, int n, FlatBasis basis);
CurvedValuation random_curved_valuation(Rng& rng, int n, CurvedBasis basis);
CurvElement random_curv_element(Rng& rng, int n);

}  // namespace klk
