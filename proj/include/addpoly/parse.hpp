#pragma once

#include <string>

#include "addpoly/additive.hpp"

namespace addpoly {

/// "p=<prime> r=<degree> [mod=<c0,c1,...,1>]" -- mod defaults to the
/// lexicographically least monic irreducible.
FieldCtx parse_field(const std::string& spec);

/// Expression in the field generator `a`, e.g. "a+1", "a^2+2*a".
FqElem parse_element(const FieldCtx& F, const std::string& text);

/// Expression in `x` and `a`: "+", "-", "*", "^", parentheses, integers.
DensePoly parse_poly(const FieldCtx& F, const std::string& text);

/// Sparse additive form: {(0,'a'),(3,'1')} means aX + X^(p^3).
AdditivePoly parse_sparse_additive(const FieldCtx& F, const std::string& text);

std::string format_element(const FieldCtx& F, const FqElem& e);
std::string format_poly(const DensePoly& f);
std::string format_additive(const AdditivePoly& A);         // as a dense-style expression in X^(p^i)
std::string format_additive_sparse(const AdditivePoly& A);  // {(i,'coeff'),...}
std::string format_rational(const Rational& r);             // "a/b" or "a"

}  // namespace addpoly
