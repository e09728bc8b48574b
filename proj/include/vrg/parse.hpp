#pragma once

#include <string_view>

#include "vrg/poly.hpp"

namespace vrg {

/// Parses an expression over `ring` into expanded normal form.
///
/// Grammar: integer and a/b literals, identifiers naming ring variables,
/// binary + - * ^ with the usual precedence, unary minus, parentheses.
/// Exponents are non-negative integer literals. Juxtaposition ("2X") is
/// rejected; write "2*X".
///
/// Throws ParseError carrying the byte offset of the problem.
Poly parse(std::string_view text, const Ring& ring);

}  // namespace vrg
