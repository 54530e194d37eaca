#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klk/double_form.hpp"
#include "klk/linalg.hpp"

namespace klk {

// Symmetric bilinear form on R^{2m}.
struct SymBilinear {
  int m = 0;
  RMatrix matrix;  // 2m x 2m, symmetric

  SymBilinear() = default;
  SymBilinear(int m_, RMatrix mat);
  DoubleForm as_form() const;  // sum_ab L_ab theta_a (x) theta_b
};

// Real and imaginary parts of z^T (A + iB) w for complex symmetric A + iB.
std::pair<SymBilinear, SymBilinear> complex_sff(const RMatrix& A, const RMatrix& B);

// Algebraic Kaehler curvature tensor.
class KahlerTensor {
 public:
  // Validates; throws InvalidSffError when an invariant fails.
  explicit KahlerTensor(DoubleForm form);
  const DoubleForm& form() const { return form_; }
  int n() const { return form_.n(); }

  // Empty string when every invariant holds, otherwise the first failure.
  static std::string check(const DoubleForm& form);

 private:
  DoubleForm form_;
};

// 1/2 sum_r l_r ^ l_r. Consecutive pairs must be real/imaginary parts of a
// complex symmetric form (either sign of the imaginary part is accepted).
KahlerTensor gauss_from_sff(int m, const std::vector<SymBilinear>& sffs);
// Empty string when the pair is valid.
std::string check_sff_pair(const SymBilinear& re, const SymBilinear& im);

int embedded_span_dim(int m, int sample_count, std::uint64_t seed);

// Form with Gaussian rational coefficients.
struct ComplexForm {
  DoubleForm re;
  DoubleForm im;
};

struct ChernResult {
  int q = 0;
  ComplexForm elementary;  // e_q of the curvature matrix Xi
  // (2 pi)^q gamma_q = i^q e_q(Xi); the imaginary part must vanish
  DoubleForm scaled;
  Rational lhs;          // (2 pi)^q (gamma_q ^ F^{n-q})(e_1..e_2n)
  Rational via_contraction;  // (n-q)!/(q!(2q)!) C^{2q}(R^q)
  Rational rhs;          // (n-q)!/(q!(2n-2q)!) (R^q ^ g^{2(n-q)})(e;e)
  bool equal = false;
};

ChernResult chern_scaled(const KahlerTensor& R, int q);

}  // namespace klk
