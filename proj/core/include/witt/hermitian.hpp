#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "witt/algebra.hpp"

namespace witt {

using GramMatrix = std::vector<std::vector<AlgebraElement>>;

// Total signature data over the finite ordering space, in enumeration order.
using SignatureVector = std::vector<std::pair<Ordering, long>>;

long signature_value(const SignatureVector& v, const Ordering& P);
bool signature_all_zero(const SignatureVector& v);

// Diagonal hermitian form over (D, sigma): entries are invertible symmetric
// elements. Rank 0 represents the zero Witt class. Over a division algebra
// rank and dimension agree.
class HermitianForm {
 public:
  HermitianForm(Algebra algebra, std::vector<AlgebraElement> entries);

  const Algebra& algebra() const { return algebra_; }
  const std::vector<AlgebraElement>& entries() const { return entries_; }
  int rank() const { return static_cast<int>(entries_.size()); }

  HermitianForm operator+(const HermitianForm& o) const;  // orthogonal sum
  HermitianForm operator-() const;

  bool operator==(const HermitianForm& o) const = default;
  std::string to_string() const;

 private:
  Algebra algebra_;
  std::vector<AlgebraElement> entries_;
};

// Module action of W(F) on W(A, sigma): <f1,...,fm> . <c1,...,cl> has entries
// fi * cj.
HermitianForm operator*(const QuadraticForm& q, const HermitianForm& h);

struct ReferenceTuple {
  std::vector<HermitianForm> forms;
};

// Trace form of a hermitian Gram matrix with respect to the algebra's
// involution: the diagonalized Gram over F of x -> Trd(sigma(x) H x).
QuadraticForm trace_form_of_gram(const Algebra& A, const GramMatrix& H);
QuadraticForm trace_form(const HermitianForm& h);

// Trd(sigma(x) x) as a quadratic form; definite exactly at the orderings
// where the involution is positive.
QuadraticForm involution_trace_form(const Algebra& A);

// The constant relating trace-form signatures to hermitian signatures:
// dim of the matrix block the Morita reduction collapses, times the local
// degree. 0 at nil orderings.
int n_invariant(const Algebra& A, const Ordering& P);

// A symmetric unit w such that the twisted involution Int(w) . sigma has
// positive-definite trace form at P. Identity cases return 1. Throws
// InternalError when the candidate search fails (which would mean the
// algebra/ordering pair is outside the supported family).
AlgebraElement positive_twist(const Algebra& A, const Ordering& P);

// Signature of h at P computed through the trace form of a presentation that
// is positive at P, normalized by n_invariant. This realizes one fixed choice
// of Morita signature per ordering; the reference-tuple normalization below
// removes the remaining sign ambiguity.
long m_signature_at(const HermitianForm& h, const Ordering& P);
SignatureVector m_signature_vector(const HermitianForm& h);

// Same computation for a form presented by an n x n hermitian Gram matrix.
long matrix_m_signature_at(const Algebra& A, const GramMatrix& H, const Ordering& P);

bool is_reference_tuple(const ReferenceTuple& H);

// Rank-one forms over the symmetric basis (with pairwise sums appended when
// needed) covering every non-nil ordering. Throws NoReferenceTuple if the
// bounded family fails to cover.
ReferenceTuple default_reference_tuple(const Algebra& A);

// Signature normalized by the first reference form with nonzero signature at
// P: zero at nil orderings, delta * m_signature elsewhere.
long h_signature_at(const HermitianForm& h, const ReferenceTuple& H, const Ordering& P);
SignatureVector total_h_signature(const HermitianForm& h, const ReferenceTuple& H);
long matrix_h_signature_at(const Algebra& A, const GramMatrix& h,
                           const std::vector<GramMatrix>& refs, const Ordering& P);

// A single form whose normalized signature is strictly positive at every
// non-nil ordering; replacing the tuple by it leaves all signatures unchanged.
HermitianForm single_reference(const ReferenceTuple& H);

// A form h_f with sign^(h_f) = f * sign^H pointwise; f defaults to +1 where
// unspecified.
HermitianForm twist_reference(const std::map<Ordering, int>& f, const ReferenceTuple& H);

// The sign function relating two reference tuples: +1 on nil orderings and
// sign^H = f * sign^H' pointwise.
std::map<Ordering, int> compare_references(const ReferenceTuple& H, const ReferenceTuple& H2);

// Pfister local-global: torsion iff every signature vanishes.
bool is_torsion(const HermitianForm& h);

// Diagonalization of a matrix-presented form; rank is preserved.
HermitianForm morita_collapse(const Algebra& A, const GramMatrix& H);

// Checks that collapsing commutes with normalized signatures: the matrix
// presentation and its diagonalization have identical signature vectors, with
// the reference tuple collapsed alongside.
bool morita_invariance_check(const Algebra& A, const GramMatrix& h,
                             const std::vector<GramMatrix>& refs);

// Residue decomposition of the valued quaternion configuration (monomial
// parameters, involution Int(c*i) . gamma): one signed count per uniformizer
// class {1, j, k}. A complete Witt invariant for this configuration.
bool larmour_supported(const Algebra& A);
std::array<long, 3> larmour_residues(const HermitianForm& h);

// Witt-class-zero test: exact where a complete invariant is available
// (residues for the valued quaternion configuration, quadratic invariants for
// the base case); otherwise False when some signature is nonzero, else
// Unknown.
enum class Ternary { False, True, Unknown };
Ternary hermitian_witt_zero(const HermitianForm& h);

}  // namespace witt
