#pragma once

#include <string>

#include "witt/hermitian.hpp"

namespace witt {

// Field spec: "Q", "R", "Q[[x,y]]", "R[[x,y]]". Variables innermost first.
FieldTower parse_field(const std::string& text);

// Element grammar: signed rational coefficients, tower variables, + - * /,
// ^ with integer exponents, parentheses. Example: (1 - x)/(1 + x*y^2).
FieldElement parse_element(const FieldTower& tower, const std::string& text);

// Form grammar: "<e1, e2, ...>" with element entries; "<>" is the zero class.
QuadraticForm parse_quadratic_form(const FieldTower& tower, const std::string& text);

// Algebra spec: "base", "etale(d=<elt>)",
// "quat(a=<elt>, b=<elt>; inv=symp)" or "... inv=orth(<algebra element>)".
Algebra parse_algebra(const FieldTower& tower, const std::string& text);

// Algebra element grammar: the element grammar extended with the units
// i, j, k (quaternion) or w = sqrt(d) (etale).
AlgebraElement parse_algebra_element(const Algebra& algebra, const std::string& text);

// Hermitian form grammar: "<s1, s2, ...>" with algebra element entries.
HermitianForm parse_hermitian_form(const Algebra& algebra, const std::string& text);

// Ordering pattern: one '+' or '-' per tower variable, innermost first.
Ordering parse_ordering(const FieldTower& tower, const std::string& text);

}  // namespace witt
