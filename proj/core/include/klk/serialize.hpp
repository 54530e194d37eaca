#pragma once

#include <string>
#include <string_view>

#include "klk/curvature.hpp"
#include "klk/double_form.hpp"
#include "klk/graded.hpp"
#include "klk/space_forms.hpp"
#include "klk/valuations.hpp"

namespace klk {

// Compact JSON text. Parsers throw ParseError carrying a byte offset.
std::string to_json(const Scalar& x);
std::string to_json(const DoubleForm& x);
std::string to_json(const GradedPoly& x);
std::string to_json(const FlatValuation& x);
std::string to_json(const CurvedValuation& x);
std::string to_json(const CurvElement& x);
std::string to_json(const ValTensor& x);
std::string to_json(const CurvValTensor& x);

Scalar scalar_from_json(std::string_view text);
DoubleForm double_form_from_json(std::string_view text);
GradedPoly graded_poly_from_json(std::string_view text);
FlatValuation flat_valuation_from_json(std::string_view text);
CurvedValuation curved_valuation_from_json(std::string_view text);
CurvElement curv_element_from_json(std::string_view text);

// "row,col,value" table with a header line.
std::string matrix_to_csv(const RMatrix& m);
RMatrix matrix_from_csv(std::string_view text);

}  // namespace klk
