#pragma once

#include <string>
#include <string_view>

#include "ffp/polynomial.hpp"

namespace ffp {

/// Parses the ASCII polynomial grammar
///
///   poly   ::= ['-'] term (('+'|'-') term)*
///   term   ::= int | [int '*'] factor ('*' factor)*
///   factor ::= var ['^' int]
///
/// Variables are the ring's declared names; whitespace is insignificant;
/// integer coefficients are reduced mod p. Errors carry the byte offset of
/// the offending token.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Canonical rendering: terms in descending order, factors joined by '*',
/// exponent 1 and unit coefficients omitted. parse(format(f)) == f.
std::string format_polynomial(const Polynomial& f);

}  // namespace ffp
