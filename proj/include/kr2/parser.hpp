#pragma once

#include <string_view>

#include "kr2/poly.hpp"

namespace kr2 {

/// Recursive-descent parser for the CLI expression grammar:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := variable | scalar-literal | '(' expr ')'
///   scalar-literal := uint ['/' uint] | 'zeta'
///
/// Variables are x, y, z, t; whitespace is insignificant; implicit
/// multiplication is rejected. The optional leading sign lets printed
/// polynomials re-parse. `zeta` needs a cyclotomic context.
MultiPoly parse_poly(std::string_view src, const CycloContextPtr& ctx = nullptr);

/// Parses a constant expression (no variables) into a Scalar.
Scalar parse_scalar(std::string_view src, const CycloContextPtr& ctx = nullptr);

}  // namespace kr2
