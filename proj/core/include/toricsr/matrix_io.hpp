#pragma once

#include <string>
#include <string_view>

#include "toricsr/integer_matrix.hpp"

namespace toricsr {

/// Reads the plain-text matrix format: a header "d n" followed by d*n
/// whitespace-separated integers of any size. '#' starts a comment that runs
/// to the end of the line. Throws ParseError.
IntegerMatrix parse_matrix_text(std::string_view text);

/// Reads {"rows": d, "cols": n, "matrix": [[...], ...]}. Entries are JSON
/// integers or decimal strings (for values beyond 64 bits); "rows" and
/// "cols" are optional but checked when present. Throws ParseError.
IntegerMatrix parse_matrix_json(std::string_view text);

/// Inverse of parse_matrix_text: header line, then one line per row.
std::string format_matrix_text(const IntegerMatrix& m);

}  // namespace toricsr
