#ifndef POLYTRI_TEXTIO_HPP
#define POLYTRI_TEXTIO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "polytri/trinomial.hpp"

namespace polytri {

/// Compact ascending coefficient text. Prime fields: one character per
/// coefficient, digits then A..G (10..16); optional whitespace and square
/// brackets are ignored ("[101201101]"). Extension fields: whitespace
/// separated element tokens ("1 0 a^2 1"). ParseError on bad input.
Poly parse_poly_compact(const Field& F, std::string_view text);
std::string format_poly_compact(const Poly& f);

/// Same text reversed (descending reading of the table string).
Poly parse_poly_compact_reversed(const Field& F, std::string_view text);

/// "n i a b" with field-formatted coefficients, e.g. "14 7 1 1".
Trinomial parse_trinomial_quad(const Field& F, std::string_view text);

/// Formula form "x^{36} - 2x^{2} - 1" (braces, "$" and spaces optional;
/// bare "x" means exponent 1). ParseError on anything else.
Trinomial parse_trinomial_formula(const Field& F, std::string_view text);

/// Minimal CSV reader: comma separated, double quotes for fields containing
/// commas, "" escapes a quote. Blank lines skipped.
std::vector<std::vector<std::string>> read_csv(const std::string& path);

}  // namespace polytri

#endif
