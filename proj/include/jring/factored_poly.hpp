#pragma once

#include <string>

#include "jring/int_poly.hpp"

namespace jring {

// Expands a product of factors in the table format, e.g.
//   (-2+u)(-1+u)u(1+u)(-2+u^{2})^{2}(1-3u+u^{2})
// Grammar: poly := factor+ ;
//          factor := "(" intexpr ")" ["^" "{"? INT "}"?]
//                  | "u" ["^" "{"? INT "}"?]
//                  | INT ;
// intexpr is a sum of signed integer-coefficient terms in u.  Whitespace is
// insignificant; exponent braces are optional.  Throws ParseError with the
// byte offset on malformed input.
IntPolynomial expand_factored_poly(const std::string& text);

}  // namespace jring
