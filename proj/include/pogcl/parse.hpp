#ifndef POGCL_PARSE_HPP
#define POGCL_PARSE_HPP

#include "pogcl/hom_poly.hpp"

#include <string_view>

namespace pogcl {

/**
 * Parses a polynomial in x, y, z and expands it.
 *
 *     expr     := ['-'] term (('+' | '-') term)*
 *     term     := factor ('*' factor)*
 *     factor   := primary ('^' uint)*
 *     primary  := rational | 'x' | 'y' | 'z' | '(' expr ')'
 *     rational := uint | uint '/' uint
 *
 * Whitespace is ignored; implicit multiplication ("2x") is rejected.
 * Throws SyntaxError (with the offending position) or NotHomogeneous.
 */
HomPoly parse_poly(std::string_view text);

}  // namespace pogcl

#endif
