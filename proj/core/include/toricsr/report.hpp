#pragma once

#include <string>

#include "toricsr/integer_matrix.hpp"
#include "toricsr/toric.hpp"

namespace toricsr {

/// JSON document for a robustness report. Keys and array elements come out
/// in a fixed order, so equal inputs give byte-identical documents.
///
/// Variable indices (bouquet members, angular order, witness) are 1-based;
/// "cones" in "hilbert_union" are positions in "fan_cones". The "input"
/// member is itself a valid document for parse_matrix_json.
std::string report_json(const IntegerMatrix& a, const RobustnessReport& report,
                        VariableStyle style = VariableStyle::indexed);

/// The {"rows", "cols", "matrix"} document echoed under "input".
std::string matrix_json(const IntegerMatrix& a);

}  // namespace toricsr
