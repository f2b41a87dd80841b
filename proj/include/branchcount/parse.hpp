// Text form of polynomials:
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | var ('^' uint)? | '(' expr ')'
//   rational := int ('/' uint)?
// No implicit multiplication; whitespace is ignored.
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "branchcount/polynomial.hpp"

namespace branchcount {

/// Ordered variable names; index i is variable x_{i+1}.
using Ring = std::vector<std::string>;

/// Splits "x,y,z" and checks the names are distinct identifiers. Throws ParseError.
Ring parse_ring(std::string_view text);

/// Throws ParseError with the byte offset of the offending token.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

/// Terms ascending in the local order, e.g. "x^2 - x*y" or "9/10*x2^4".
/// parse_polynomial reads the output back to an equal polynomial.
std::string format_polynomial(const Polynomial& f, const Ring& ring);

/// The message, the offending line and a caret under `position`.
std::string caret_diagnostic(std::string_view text, std::size_t position, const std::string& message);

}  // namespace branchcount
