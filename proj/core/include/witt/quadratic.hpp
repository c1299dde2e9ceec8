#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "witt/field.hpp"

namespace witt {

// A place of Q: a finite prime or the real place.
struct Place {
  bool is_infinite = false;
  Integer prime = 0;

  static Place infinite() { return Place{true, 0}; }
  static Place finite(Integer p) { return Place{false, std::move(p)}; }
};

// Hilbert symbol (a,b) at the given place; a, b nonzero rationals.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

class QuadraticForm;

// Prime ideals of the Witt ring W(F): kernels of signatures, kernels of
// signatures mod an odd prime, and the fundamental ideal.
struct WittPrimeIdeal {
  enum class Kind { SignKernel, ModPKernel, Fundamental };

  Kind kind = Kind::Fundamental;
  Ordering P;      // SignKernel, ModPKernel
  Integer p = 0;   // ModPKernel only; odd prime

  static WittPrimeIdeal sign_kernel(Ordering P);
  static WittPrimeIdeal mod_p_kernel(Ordering P, Integer p);
  static WittPrimeIdeal fundamental();

  bool contains(const QuadraticForm& q) const;
  bool contains_two() const { return kind == Kind::Fundamental; }
  std::string to_string() const;
};

// Diagonal quadratic form over a tower field. Entries are nonzero; the
// dimension-0 form represents the zero Witt class.
class QuadraticForm {
 public:
  QuadraticForm(FieldTower field, std::vector<FieldElement> entries);

  // Symmetric Gaussian congruence reduction of a nonsingular Gram matrix.
  static QuadraticForm diagonalize(const FieldTower& field,
                                   std::vector<std::vector<FieldElement>> gram);

  const FieldTower& field() const { return field_; }
  const std::vector<FieldElement>& entries() const { return entries_; }
  int dimension() const { return static_cast<int>(entries_.size()); }

  long signature_at(const Ordering& P) const;
  std::vector<std::pair<Ordering, long>> signature_vector() const;

  // Splits off the two residue forms with respect to the outermost variable;
  // requires height >= 1. First component: even-valuation entries; second:
  // odd-valuation entries. Both live one tower level down.
  std::pair<QuadraticForm, QuadraticForm> springer_residues() const;

  // Witt-class-zero decision: recursive Springer reduction to the base;
  // signature over the real-closed surrogate, classical invariants
  // (dimension, signature, discriminant, Hasse symbols) over Q.
  bool is_witt_zero() const;

  bool is_torsion() const;  // all signatures vanish
  bool in_fundamental_ideal() const { return dimension() % 2 == 0; }

  QuadraticForm operator+(const QuadraticForm& o) const;  // orthogonal sum
  QuadraticForm operator*(const QuadraticForm& o) const;  // tensor product
  QuadraticForm operator-() const;
  QuadraticForm scaled(const FieldElement& c) const;

  bool operator==(const QuadraticForm& o) const = default;
  std::string to_string() const;

 private:
  FieldTower field_;
  std::vector<FieldElement> entries_;
};

// Tensor product of the binary forms <1, sign_P(ti) * ti>: signature 2^h at P
// and 0 at every other ordering.
QuadraticForm indicator_form(const FieldTower& field, const Ordering& P);

// A form whose signature at every ordering P is nonzero with the sign f(P).
QuadraticForm realize_positive_pattern(const FieldTower& field,
                                       const std::map<Ordering, int>& f);

// A form whose signature vanishes exactly on U.
QuadraticForm realize_vanishing_pattern(const FieldTower& field,
                                        const std::set<Ordering>& U);

}  // namespace witt
