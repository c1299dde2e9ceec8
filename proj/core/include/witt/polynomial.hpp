#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "witt/rational.hpp"

namespace witt {

// Exponent vector of a monomial; one entry per tower variable, innermost
// variable first. Negative exponents are permitted in intermediate (Laurent)
// values; normalized field elements only carry non-negative exponents.
using Exponents = std::vector<int>;

// Total order on monomials matching the valuation of the iterated Laurent
// series field: the last (outermost) coordinate is most significant. The
// minimal monomial of a polynomial is its dominant term, since every tower
// variable is infinitesimal with respect to the inner field.
struct MonomialLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    for (size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

// Sparse multivariate polynomial with rational coefficients.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, MonomialLess>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial monomial(const Exponents& e, const Rational& c);
  static Polynomial variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  // Dominant term: the monomial-order minimum. Requires a nonzero polynomial.
  const Exponents& min_monomial() const;
  const Rational& min_coefficient() const;

  Exponents min_exponents() const;  // componentwise min over the support
  Exponents max_exponents() const;  // componentwise max over the support

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  // Multiply by a single monomial (Laurent shift).
  Polynomial shifted(const Exponents& e) const;

  // Exact division; nullopt when the division does not come out even.
  std::optional<Polynomial> divided_by(const Polynomial& d) const;

  // Exact square root over Q[x...]; nullopt when not a perfect square.
  std::optional<Polynomial> square_root() const;

  // Degree in one variable (max exponent); -1 for the zero polynomial.
  int degree_in(int var) const;
  int min_exponent_in(int var) const;

  // Coefficient of var^k, as a polynomial with the same variable count and
  // exponent 0 in position var.
  Polynomial coefficient_of(int var, int k) const;

  // Drop terms whose exponent in `var` exceeds the minimum, remove the
  // variable from the exponent vectors. The slice of the dominant var-level.
  Polynomial min_slice_without(int var) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  // Scale so that coefficients are coprime integers and the coefficient of
  // the minimal monomial is positive. Zero stays zero.
  Polynomial primitive() const;

  void add_term(const Exponents& e, const Rational& c);

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  Terms terms_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace witt
