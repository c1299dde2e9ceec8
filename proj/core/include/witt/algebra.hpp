#pragma once

#include <optional>
#include <string>
#include <vector>

#include "witt/quadratic.hpp"

namespace witt {

enum class AlgebraKind { Base, QuadraticEtale, Quaternion };
enum class InvolutionKind { Identity, Conjugation, Symplectic, Orthogonal };

// Element of a division algebra over the tower field, in coordinates over the
// F-basis: (1) for the base field, (1, sqrt(d)) for the quadratic etale case,
// (1, i, j, k) for quaternions.
struct AlgebraElement {
  std::vector<FieldElement> c;

  bool operator==(const AlgebraElement& o) const = default;
};

struct QuaternionValuationData {
  ValueVector v_i, v_j, v_k;  // values of the quaternion units
  int index = 0;              // [Gamma_D : Gamma_F]
  int residue_degree = 0;     // Draxl: index * residue_degree = 4
  bool residue_is_base = false;
};

// D in {F, F(sqrt d), (a,b)_F} together with an F-linear involution. The
// involution is the identity on the base field, conjugation on the etale
// extension, and either quaternion conjugation (symplectic) or Int(s) after
// conjugation with s an invertible pure quaternion (orthogonal).
class Algebra {
 public:
  static Algebra base(FieldTower field);
  static Algebra quadratic_etale(FieldTower field, FieldElement d);
  static Algebra quaternion_symplectic(FieldTower field, FieldElement a, FieldElement b);
  static Algebra quaternion_orthogonal(FieldTower field, FieldElement a, FieldElement b,
                                       AlgebraElement s);

  const FieldTower& field() const { return field_; }
  AlgebraKind kind() const { return kind_; }
  InvolutionKind involution() const { return involution_; }
  int dim() const;  // dimension over F: 1, 2 or 4
  const FieldElement& param_a() const { return a_; }
  const FieldElement& param_b() const { return b_; }
  const FieldElement& param_d() const { return d_; }
  const AlgebraElement& orthogonal_s() const { return s_; }

  bool operator==(const Algebra& o) const = default;
  std::string to_string() const;

  // --- element arithmetic -------------------------------------------------
  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement from_field(const FieldElement& c) const;
  AlgebraElement from_rational(const Rational& c) const;
  AlgebraElement basis_element(int m) const;

  bool is_zero(const AlgebraElement& u) const;
  AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v) const;
  AlgebraElement sub(const AlgebraElement& u, const AlgebraElement& v) const;
  AlgebraElement neg(const AlgebraElement& u) const;
  AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v) const;
  AlgebraElement scale(const FieldElement& c, const AlgebraElement& u) const;
  AlgebraElement inverse(const AlgebraElement& u) const;  // NonInvertible

  AlgebraElement conjugation(const AlgebraElement& u) const;  // gamma / bar / id
  AlgebraElement involve(const AlgebraElement& u) const;
  FieldElement trd(const AlgebraElement& u) const;
  FieldElement nrd(const AlgebraElement& u) const;
  bool is_symmetric(const AlgebraElement& u) const;
  bool is_pure_quaternion(const AlgebraElement& u) const;

  // F-basis of Sym(A, sigma), computed as the kernel of involve - id.
  std::vector<AlgebraElement> sym_basis() const;

  // <1> (base), <1,-d> (etale), <1,-a,-b,ab> (quaternion).
  QuadraticForm norm_form() const;

  bool is_split_at(const Ordering& P) const;
  bool is_nil_at(const Ordering& P) const;
  std::vector<Ordering> nil_orderings() const;
  std::vector<Ordering> non_nil_orderings() const;

  bool is_division() const;

  // --- valuation of the quaternion configuration --------------------------
  // Supported shape: a and b are monomials with positive coefficients whose
  // exponent vectors are nonzero and distinct mod 2. Throws
  // UnsupportedAlgebraShape otherwise.
  ValueVector element_valuation(const AlgebraElement& u) const;
  QuaternionValuationData valuation_data() const;

  // --- hermitian Gram reduction -------------------------------------------
  // Congruence diagonalization of a sigma-hermitian nonsingular Gram matrix;
  // returns invertible symmetric diagonal entries. SingularForm on singular
  // input; UnsupportedAlgebraShape when pivoting requires division in a
  // non-division algebra.
  std::vector<AlgebraElement> hermitian_diagonalize(
      std::vector<std::vector<AlgebraElement>> gram) const;

  std::string element_to_string(const AlgebraElement& u) const;

 private:
  Algebra(FieldTower field, AlgebraKind kind, InvolutionKind inv)
      : field_(std::move(field)),
        kind_(kind),
        involution_(inv),
        a_(FieldElement::zero(field_.height())),
        b_(FieldElement::zero(field_.height())),
        d_(FieldElement::zero(field_.height())),
        s_{{}} {}

  void require_quaternion() const;
  void check_valuation_shape() const;

  FieldTower field_;
  AlgebraKind kind_;
  InvolutionKind involution_;
  FieldElement a_, b_, d_;
  AlgebraElement s_;        // orthogonal involution parameter
  AlgebraElement s_inv_;    // cached inverse of s_
};

}  // namespace witt
