#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "witt/errors.hpp"
#include "witt/polynomial.hpp"
#include "witt/rational.hpp"

namespace witt {

enum class BaseField { Rationals, RealClosedSurrogate };

// F = B((t1))...((th)): iterated Laurent series over Q or a real-closed
// surrogate whose elements are rationals. Variables are listed innermost
// first, so R[[x,y]] means (R((x)))((y)).
class FieldTower {
 public:
  FieldTower(BaseField base, std::vector<std::string> variables);

  BaseField base() const { return base_; }
  const std::vector<std::string>& variables() const { return variables_; }
  int height() const { return static_cast<int>(variables_.size()); }

  bool operator==(const FieldTower& o) const = default;
  std::string to_string() const;

 private:
  BaseField base_;
  std::vector<std::string> variables_;
};

// One ordering of the tower field: the base ordering (unique for both
// supported bases) plus a sign for each tower variable.
struct Ordering {
  std::vector<int8_t> signs;  // +1 or -1 per variable, innermost first

  int sign_of_variable(int i) const { return signs[i]; }
  auto operator<=>(const Ordering&) const = default;
  std::string to_string() const;  // e.g. "+-"
};

// Enumerates all 2^h orderings, deterministically: the all-positive ordering
// first, variable i flips with bit i of the enumeration index.
std::vector<Ordering> enumerate_orderings(const FieldTower& tower);

// Value of the (t1,...,th)-adic valuation; entries may be half-integers for
// division algebra elements, so twice the value is stored. Ordered
// anti-lexicographically with the last (outermost) coordinate most
// significant.
class ValueVector {
 public:
  ValueVector() = default;
  explicit ValueVector(std::vector<long> twice) : twice_(std::move(twice)) {}
  static ValueVector integral(const std::vector<long>& v);
  static ValueVector zero(int h) { return ValueVector(std::vector<long>(h, 0)); }

  int size() const { return static_cast<int>(twice_.size()); }
  const std::vector<long>& twice() const { return twice_; }
  bool is_integral() const;
  bool is_zero() const;

  ValueVector operator+(const ValueVector& o) const;
  ValueVector operator-(const ValueVector& o) const;
  ValueVector half() const;  // divide by 2; requires even entries... stored exactly

  bool operator==(const ValueVector& o) const { return twice_ == o.twice_; }
  bool operator<(const ValueVector& o) const;

  // Coset of the value modulo Z^h, encoded as a bit per coordinate
  // (1 = half-integral coordinate).
  std::vector<int> coset_mod_integral() const;

  std::string to_string() const;

 private:
  std::vector<long> twice_;
};

// Element of the tower field in normal form: a reduced fraction of
// polynomials with the denominator's minimal-monomial coefficient equal to 1.
// Equality of field elements is structural equality of the representation.
class FieldElement {
 public:
  FieldElement() : num_(0), den_(Polynomial::constant(0, 1)) {}

  static FieldElement zero(int nvars);
  static FieldElement one(int nvars);
  static FieldElement from_rational(int nvars, const Rational& c);
  static FieldElement variable(int nvars, int index);
  // Accepts Laurent numerator/denominator; normalizes.
  static FieldElement fraction(Polynomial num, Polynomial den);

  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;  // DivisionByZero
  FieldElement operator-() const;
  FieldElement inverse() const;  // DivisionByZero
  bool operator==(const FieldElement& o) const = default;

  FieldElement pow(long k) const;

  // Sign of the element under the ordering P. Multiplicative and total;
  // zero only for the zero element. The sign is read off the dominant
  // monomial: its coefficient sign times the product of variable signs
  // raised to the exponents.
  int sign_at(const Ordering& P) const;

  // The (t1,...,th)-adic valuation; throws ZeroElement on zero.
  ValueVector valuation() const;

  // Writes the element as var^k * u with u a unit at var and returns u
  // evaluated at var = 0, an element of the tower with `var` removed.
  FieldElement leading_unit_residue(int var) const;  // ZeroElement

  // Exact square test in the tower field.
  bool is_square() const;

  // True when num and den are single monomials.
  bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }

  // Rational value of an element of a height-0 tower.
  Rational as_rational() const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  FieldElement(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
  static FieldElement make_normalized(Polynomial num, Polynomial den);

  Polynomial num_, den_;
};

}  // namespace witt
