#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "witt/hermitian.hpp"

namespace witt {

// Pair (I, N): a prime ideal of W(F) together with a submodule of W(A,sigma)
// containing I * W(A,sigma).
struct MIdealDescriptor {
  enum class Submodule { SignHKernel, ModPHKernel, IAsigma, IFtimesW, CustomGenerators };

  WittPrimeIdeal ideal;
  Submodule submodule = Submodule::IAsigma;
  Ordering P;      // SignHKernel / ModPHKernel
  Integer p = 0;   // ModPHKernel; odd prime
  std::vector<HermitianForm> generators;  // CustomGenerators

  static MIdealDescriptor sign_pair(const Ordering& P);
  static MIdealDescriptor mod_p_pair(const Ordering& P, Integer p);
  static MIdealDescriptor fundamental_pair();                       // (I(F), I(A,sigma))
  static MIdealDescriptor fundamental_times_module();               // (I(F), I(F)*W)
  static MIdealDescriptor custom(WittPrimeIdeal I, std::vector<HermitianForm> gens);

  std::string to_string() const;
};

// Generator of the image of the normalized signature at P, from the case
// table (base and symplectic 1, unitary 1, orthogonal split 2), certified by
// a scan over rank-one forms of the symmetric-basis family.
long image_generator(const Algebra& A, const Ordering& P);

// A certificate that h lies in I(F) * W(A,sigma): a decomposition
// h = sum q_i * h_i with every q_i of even dimension.
using IFWCertificate = std::vector<std::pair<QuadraticForm, HermitianForm>>;

// Three-valued membership. Unknown is an honest answer for submodules
// without a complete computable invariant.
Ternary mideal_membership(const HermitianForm& h, const MIdealDescriptor& d,
                          const ReferenceTuple& H,
                          const std::optional<IFWCertificate>& certificate = std::nullopt);

struct PrimeCheckReport {
  bool pass = false;
  bool ideal_action_ok = false;   // I * W(A,sigma) contained in N
  bool module_closure_ok = false; // W(F) * N contained in N
  bool primality_ok = false;      // q*h in N implies q in I or h in N
  bool proper_ok = false;         // N is proper
  int samples_checked = 0;
  std::string counterexample;     // empty when pass
};

PrimeCheckReport prime_m_ideal_check(
    const Algebra& A, const MIdealDescriptor& d,
    const std::vector<std::pair<QuadraticForm, HermitianForm>>& samples,
    const ReferenceTuple& H);

struct ClassifiedIdeal {
  MIdealDescriptor canonical;
  bool descriptions_agree = false;  // kernel form vs p*W + kernel form
  int samples_checked = 0;
};

// The unique prime N over a 2-not-in-I prime ideal: the signature kernel, or
// mod-p signature kernel with its two equivalent descriptions.
ClassifiedIdeal classify_prime_m_ideal(const Algebra& A, const WittPrimeIdeal& I,
                                       const std::vector<HermitianForm>& samples,
                                       const ReferenceTuple& H);

// End-to-end data for the reference quaternion configuration: anisotropy of
// the norm form, value group, residue basis, the containment
// I(F)*W in 2Z^3 on a generating family, and the index-2 comparison that
// separates I(F)*W from I(A,sigma).
struct SeparationReport {
  bool norm_form_anisotropic = false;
  int base_residue_count = 0;
  bool base_residues_dim1 = false;
  QuaternionValuationData valuation;
  std::array<std::array<long, 3>, 3> basis_residues{};
  bool basis_is_lattice_basis = false;
  int generators_checked = 0;
  bool generators_in_doubled_lattice = false;
  long index_lower_bound = 0;   // 8 when the containment holds
  int rank_parity_index = 2;    // index of I(A,sigma)
  bool submodules_distinct = false;
  std::string witness;          // even-rank form with odd residue
};

SeparationReport module_separation_report(const Algebra& A, unsigned long seed);

// Member of the family generated by powers of one symmetric unit:
// an orthogonal sum of rank-one forms <a^i>.
struct PowerFamilyForm {
  std::vector<long> exponents;  // multiset, kept sorted

  long rank() const { return static_cast<long>(exponents.size()); }
};

// Product with multiset convolution of exponents; rank is multiplicative.
PowerFamilyForm boxtimes(const PowerFamilyForm& f, const PowerFamilyForm& g);

HermitianForm power_family_to_form(const Algebra& A, const AlgebraElement& a,
                                   const PowerFamilyForm& f);

struct FamilyCheckReport {
  bool pass = false;
  bool rank_multiplicative = false;
  bool hyperbolic_pairs_ok = false;   // h_a + h_{-a} and h_1 + h_{-a^2}
  bool parity_implication_ok = false; // boxtimes in I(A,sigma) forces a factor in
  std::string counterexample;
};

FamilyCheckReport fa_prime_criterion_check(const Algebra& A, const AlgebraElement& a,
                                           const std::vector<PowerFamilyForm>& samples);

// A non-trivial (W(F), Z)-morphism pair recovered from generator values:
// f = sign_P and g = scale * sign_P^H.
struct PairMorphism {
  bool trivial = false;
  Ordering P;
  Rational scale = 0;
};

PairMorphism recover_morphism(const Algebra& A,
                              const std::vector<std::pair<FieldElement, int>>& f_values,
                              const std::vector<std::pair<HermitianForm, Integer>>& g_values,
                              const ReferenceTuple& H);

bool morphisms_equivalent(const PairMorphism& m1, const PairMorphism& m2);

// A form with zero signature at P and nonzero signature at Q.
HermitianForm separating_form(const Algebra& A, const ReferenceTuple& H, const Ordering& P,
                              const Ordering& Q);

}  // namespace witt
