#pragma once

#include <string>
#include <string_view>

#include "cayley/algebra.hpp"

namespace cayley {

class Element;

/// Parses an element expression such as "4e1'+5e2+3e3'-5e4" or
/// "(1-2i)e3+ie7+1/2".
///
///   element  := ['-'] term (('+'|'-') term)*
///   term     := scalar | scalar basis | basis
///   scalar   := rational | rational 'i' | 'i' | '(' rational ('+'|'-') rational 'i' ')'
///   rational := integer ['/' positive-integer]
///   basis    := 'e' digit ['\''] | '1'
///
/// Whitespace is ignored. Repeated basis labels accumulate. Primes are
/// mandatory on the primed indices of Hs and Os and rejected elsewhere.
///
/// Throws ParseError (with byte position), PrimeMismatch,
/// ImaginaryScalarInRealAlgebra or IndexOutOfRange.
Element parse_element(std::string_view text, AlgebraId algebra);

/// Canonical text: terms in index order, zeros dropped, unit coefficients
/// elided, "0" for the zero element.
std::string format_element(const Element& a);

}  // namespace cayley
