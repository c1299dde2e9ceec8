#include "witt/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace witt {

namespace {

bool monomial_with_positive_coefficient(const FieldElement& e) {
  if (e.is_zero() || !e.is_monomial()) return false;
  return sign_of(e.num().min_coefficient()) > 0;  // den is +1-normalized
}

}  // namespace

Algebra Algebra::base(FieldTower field) {
  return Algebra(std::move(field), AlgebraKind::Base, InvolutionKind::Identity);
}

Algebra Algebra::quadratic_etale(FieldTower field, FieldElement d) {
  if (d.is_zero()) throw Error("etale parameter d must be nonzero");
  if (d.is_square())
    throw UnsupportedAlgebraShape("etale parameter d must not be a square in F");
  Algebra A(std::move(field), AlgebraKind::QuadraticEtale, InvolutionKind::Conjugation);
  A.d_ = std::move(d);
  return A;
}

Algebra Algebra::quaternion_symplectic(FieldTower field, FieldElement a, FieldElement b) {
  if (a.is_zero() || b.is_zero()) throw Error("quaternion parameters must be nonzero");
  Algebra A(std::move(field), AlgebraKind::Quaternion, InvolutionKind::Symplectic);
  A.a_ = std::move(a);
  A.b_ = std::move(b);
  return A;
}

Algebra Algebra::quaternion_orthogonal(FieldTower field, FieldElement a, FieldElement b,
                                       AlgebraElement s) {
  if (a.is_zero() || b.is_zero()) throw Error("quaternion parameters must be nonzero");
  Algebra A(std::move(field), AlgebraKind::Quaternion, InvolutionKind::Orthogonal);
  A.a_ = std::move(a);
  A.b_ = std::move(b);
  if (static_cast<int>(s.c.size()) != 4) throw Error("orthogonal parameter must be a quaternion");
  if (!A.is_pure_quaternion(s))
    throw UnsupportedAlgebraShape("orthogonal involution parameter must be a pure quaternion");
  if (A.nrd(s).is_zero())
    throw UnsupportedAlgebraShape("orthogonal involution parameter must be invertible");
  A.s_ = std::move(s);
  A.s_inv_ = A.inverse(A.s_);
  return A;
}

int Algebra::dim() const {
  switch (kind_) {
    case AlgebraKind::Base:
      return 1;
    case AlgebraKind::QuadraticEtale:
      return 2;
    case AlgebraKind::Quaternion:
      return 4;
  }
  return 0;
}

std::string Algebra::to_string() const {
  const auto& names = field_.variables();
  switch (kind_) {
    case AlgebraKind::Base:
      return "base";
    case AlgebraKind::QuadraticEtale:
      return "etale(d=" + d_.to_string(names) + ")";
    case AlgebraKind::Quaternion: {
      std::string s = "quat(a=" + a_.to_string(names) + ", b=" + b_.to_string(names) + "; inv=";
      if (involution_ == InvolutionKind::Symplectic)
        s += "symp";
      else
        s += "orth(" + element_to_string(s_) + ")";
      return s + ")";
    }
  }
  return "?";
}

AlgebraElement Algebra::zero() const {
  return AlgebraElement{std::vector<FieldElement>(dim(), FieldElement::zero(field_.height()))};
}

AlgebraElement Algebra::one() const { return from_field(FieldElement::one(field_.height())); }

AlgebraElement Algebra::from_field(const FieldElement& c) const {
  AlgebraElement u = zero();
  u.c[0] = c;
  return u;
}

AlgebraElement Algebra::from_rational(const Rational& c) const {
  return from_field(FieldElement::from_rational(field_.height(), c));
}

AlgebraElement Algebra::basis_element(int m) const {
  assert(m >= 0 && m < dim());
  AlgebraElement u = zero();
  u.c[m] = FieldElement::one(field_.height());
  return u;
}

bool Algebra::is_zero(const AlgebraElement& u) const {
  return std::all_of(u.c.begin(), u.c.end(), [](const FieldElement& e) { return e.is_zero(); });
}

AlgebraElement Algebra::add(const AlgebraElement& u, const AlgebraElement& v) const {
  AlgebraElement r = u;
  for (int m = 0; m < dim(); ++m) r.c[m] = r.c[m] + v.c[m];
  return r;
}

AlgebraElement Algebra::sub(const AlgebraElement& u, const AlgebraElement& v) const {
  AlgebraElement r = u;
  for (int m = 0; m < dim(); ++m) r.c[m] = r.c[m] - v.c[m];
  return r;
}

AlgebraElement Algebra::neg(const AlgebraElement& u) const {
  AlgebraElement r = u;
  for (int m = 0; m < dim(); ++m) r.c[m] = -r.c[m];
  return r;
}

AlgebraElement Algebra::mul(const AlgebraElement& u, const AlgebraElement& v) const {
  switch (kind_) {
    case AlgebraKind::Base: {
      AlgebraElement r = zero();
      r.c[0] = u.c[0] * v.c[0];
      return r;
    }
    case AlgebraKind::QuadraticEtale: {
      AlgebraElement r = zero();
      r.c[0] = u.c[0] * v.c[0] + d_ * (u.c[1] * v.c[1]);
      r.c[1] = u.c[0] * v.c[1] + u.c[1] * v.c[0];
      return r;
    }
    case AlgebraKind::Quaternion: {
      const FieldElement &u0 = u.c[0], &u1 = u.c[1], &u2 = u.c[2], &u3 = u.c[3];
      const FieldElement &v0 = v.c[0], &v1 = v.c[1], &v2 = v.c[2], &v3 = v.c[3];
      AlgebraElement r = zero();
      r.c[0] = u0 * v0 + a_ * (u1 * v1) + b_ * (u2 * v2) - a_ * b_ * (u3 * v3);
      r.c[1] = u0 * v1 + u1 * v0 - b_ * (u2 * v3) + b_ * (u3 * v2);
      r.c[2] = u0 * v2 + u2 * v0 + a_ * (u1 * v3) - a_ * (u3 * v1);
      r.c[3] = u0 * v3 + u3 * v0 + u1 * v2 - u2 * v1;
      return r;
    }
  }
  return zero();
}

AlgebraElement Algebra::scale(const FieldElement& c, const AlgebraElement& u) const {
  AlgebraElement r = u;
  for (int m = 0; m < dim(); ++m) r.c[m] = c * r.c[m];
  return r;
}

AlgebraElement Algebra::conjugation(const AlgebraElement& u) const {
  AlgebraElement r = u;
  for (int m = 1; m < dim(); ++m) r.c[m] = -r.c[m];
  return r;
}

AlgebraElement Algebra::involve(const AlgebraElement& u) const {
  switch (involution_) {
    case InvolutionKind::Identity:
      return u;
    case InvolutionKind::Conjugation:
    case InvolutionKind::Symplectic:
      return conjugation(u);
    case InvolutionKind::Orthogonal:
      return mul(mul(s_, conjugation(u)), s_inv_);
  }
  return u;
}

FieldElement Algebra::trd(const AlgebraElement& u) const {
  if (kind_ == AlgebraKind::Base) return u.c[0];
  return u.c[0] + u.c[0];
}

FieldElement Algebra::nrd(const AlgebraElement& u) const {
  switch (kind_) {
    case AlgebraKind::Base:
      return u.c[0];
    case AlgebraKind::QuadraticEtale:
      return u.c[0] * u.c[0] - d_ * (u.c[1] * u.c[1]);
    case AlgebraKind::Quaternion:
      return u.c[0] * u.c[0] - a_ * (u.c[1] * u.c[1]) - b_ * (u.c[2] * u.c[2]) +
             a_ * b_ * (u.c[3] * u.c[3]);
  }
  return FieldElement::zero(field_.height());
}

AlgebraElement Algebra::inverse(const AlgebraElement& u) const {
  FieldElement n = nrd(u);
  if (n.is_zero()) throw NonInvertible();
  if (kind_ == AlgebraKind::Base) {
    AlgebraElement r = zero();
    r.c[0] = u.c[0].inverse();
    return r;
  }
  return scale(n.inverse(), conjugation(u));
}

bool Algebra::is_symmetric(const AlgebraElement& u) const { return involve(u) == u; }

bool Algebra::is_pure_quaternion(const AlgebraElement& u) const {
  return kind_ == AlgebraKind::Quaternion && u.c[0].is_zero();
}

std::vector<AlgebraElement> Algebra::sym_basis() const {
  const int n = dim();
  const int h = field_.height();
  // Columns of involve - id on the standard basis.
  std::vector<std::vector<FieldElement>> m(n, std::vector<FieldElement>(n, FieldElement::zero(h)));
  for (int col = 0; col < n; ++col) {
    AlgebraElement img = involve(basis_element(col));
    for (int row = 0; row < n; ++row) {
      m[row][col] = img.c[row];
      if (row == col) m[row][col] = m[row][col] - FieldElement::one(h);
    }
  }
  // Reduced row echelon form; the kernel basis comes from the free columns.
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int pr = -1;
    for (int i = r; i < n; ++i)
      if (!m[i][c].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[r]);
    FieldElement inv = m[r][c].inverse();
    for (int j = 0; j < n; ++j) m[r][j] = m[r][j] * inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      FieldElement f = m[i][c];
      for (int j = 0; j < n; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<AlgebraElement> out;
  for (int c = 0; c < n; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
    AlgebraElement v = zero();
    v.c[c] = FieldElement::one(h);
    for (size_t k = 0; k < pivot_col.size(); ++k) v.c[pivot_col[k]] = -m[k][c];
    out.push_back(std::move(v));
  }
  return out;
}

QuadraticForm Algebra::norm_form() const {
  const int h = field_.height();
  switch (kind_) {
    case AlgebraKind::Base:
      return QuadraticForm(field_, {FieldElement::one(h)});
    case AlgebraKind::QuadraticEtale:
      return QuadraticForm(field_, {FieldElement::one(h), -d_});
    case AlgebraKind::Quaternion:
      return QuadraticForm(field_, {FieldElement::one(h), -a_, -b_, a_ * b_});
  }
  return QuadraticForm(field_, {});
}

bool Algebra::is_split_at(const Ordering& P) const {
  switch (kind_) {
    case AlgebraKind::Base:
      return true;
    case AlgebraKind::QuadraticEtale:
      return d_.sign_at(P) > 0;
    case AlgebraKind::Quaternion:
      return a_.sign_at(P) > 0 || b_.sign_at(P) > 0;
  }
  return true;
}

bool Algebra::is_nil_at(const Ordering& P) const {
  switch (involution_) {
    case InvolutionKind::Identity:
      return false;
    case InvolutionKind::Conjugation:
      return is_split_at(P);
    case InvolutionKind::Symplectic:
      return is_split_at(P);
    case InvolutionKind::Orthogonal:
      return !is_split_at(P);
  }
  return false;
}

std::vector<Ordering> Algebra::nil_orderings() const {
  std::vector<Ordering> out;
  for (const auto& P : enumerate_orderings(field_))
    if (is_nil_at(P)) out.push_back(P);
  return out;
}

std::vector<Ordering> Algebra::non_nil_orderings() const {
  std::vector<Ordering> out;
  for (const auto& P : enumerate_orderings(field_))
    if (!is_nil_at(P)) out.push_back(P);
  return out;
}

bool Algebra::is_division() const {
  switch (kind_) {
    case AlgebraKind::Base:
      return true;
    case AlgebraKind::QuadraticEtale:
      return !d_.is_square();
    case AlgebraKind::Quaternion:
      // The norm form is a 2-fold Pfister form: isotropic iff hyperbolic.
      return !norm_form().is_witt_zero();
  }
  return false;
}

void Algebra::require_quaternion() const {
  if (kind_ != AlgebraKind::Quaternion)
    throw UnsupportedAlgebraShape("operation requires a quaternion algebra");
}

void Algebra::check_valuation_shape() const {
  require_quaternion();
  if (!monomial_with_positive_coefficient(a_) || !monomial_with_positive_coefficient(b_))
    throw UnsupportedAlgebraShape(
        "valuation supported only for monomial quaternion parameters with positive coefficients");
  ValueVector va = a_.valuation(), vb = b_.valuation();
  auto ca = va.coset_mod_integral();  // here: exponents mod 2, since va = 2*v(i)
  auto cb = vb.coset_mod_integral();
  bool a_odd = std::any_of(ca.begin(), ca.end(), [](int v) { return v != 0; });
  bool b_odd = std::any_of(cb.begin(), cb.end(), [](int v) { return v != 0; });
  if (!a_odd || !b_odd || ca == cb)
    throw UnsupportedAlgebraShape(
        "valuation requires the parameter exponents to be nonzero and distinct mod 2");
}

ValueVector Algebra::element_valuation(const AlgebraElement& u) const {
  check_valuation_shape();
  if (is_zero(u)) throw ZeroElement("valuation of zero is undefined");
  ValueVector va = a_.valuation(), vb = b_.valuation();
  std::vector<ValueVector> unit_value = {
      ValueVector::zero(field_.height()), va.half(), vb.half(), (va + vb).half()};
  std::optional<ValueVector> best;
  for (int m = 0; m < 4; ++m) {
    if (u.c[m].is_zero()) continue;
    ValueVector v = u.c[m].valuation() + unit_value[m];
    if (!best || v < *best) best = v;
  }
  return *best;
}

QuaternionValuationData Algebra::valuation_data() const {
  check_valuation_shape();
  QuaternionValuationData data;
  ValueVector va = a_.valuation(), vb = b_.valuation();
  data.v_i = va.half();
  data.v_j = vb.half();
  data.v_k = (va + vb).half();
  // The cosets of v(i), v(j) mod Gamma_F are distinct and nonzero, hence
  // independent over F_2; together with v(k) = v(i)+v(j) they span a group of
  // order 4 over Gamma_F.
  data.index = 4;
  data.residue_degree = 1;
  data.residue_is_base = true;
  return data;
}

std::vector<AlgebraElement> Algebra::hermitian_diagonalize(
    std::vector<std::vector<AlgebraElement>> g) const {
  const int n = static_cast<int>(g.size());
  for (const auto& row : g)
    if (static_cast<int>(row.size()) != n) throw Error("Gram matrix must be square");
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (!(g[j][i] == involve(g[i][j])))
        throw Error("Gram matrix must be hermitian with respect to the involution");

  // Basis change v_dst <- v_dst + v_src * c.
  auto add_row_col = [&](int dst, int src, const AlgebraElement& c) {
    AlgebraElement sc = involve(c);
    for (int t = 0; t < n; ++t) g[dst][t] = add(g[dst][t], mul(sc, g[src][t]));
    for (int t = 0; t < n; ++t) g[t][dst] = add(g[t][dst], mul(g[t][src], c));
  };
  auto swap_row_col = [&](int a, int b) {
    if (a == b) return;
    std::swap(g[a], g[b]);
    for (int t = 0; t < n; ++t) std::swap(g[t][a], g[t][b]);
  };

  std::vector<AlgebraElement> diag;
  for (int r = 0; r < n; ++r) {
    if (nrd(g[r][r]).is_zero()) {
      int pivot = -1;
      for (int s = r; s < n; ++s)
        if (!nrd(g[s][s]).is_zero()) {
          pivot = s;
          break;
        }
      if (pivot >= 0) {
        swap_row_col(r, pivot);
      } else {
        int pr = -1, pc = -1;
        for (int s = r; s < n && pr < 0; ++s)
          for (int t = s + 1; t < n; ++t)
            if (!is_zero(g[s][t])) {
              pr = s;
              pc = t;
              break;
            }
        if (pr < 0) {
          bool all_zero = true;
          for (int s = r; s < n; ++s)
            if (!is_zero(g[s][s])) all_zero = false;
          if (all_zero) throw SingularForm();
          throw UnsupportedAlgebraShape(
              "hermitian reduction requires a division algebra for this input");
        }
        // Make the (pr,pr) entry m + involve(m) with m = g[pr][pc] * c.
        std::vector<AlgebraElement> candidates;
        if (!nrd(g[pr][pc]).is_zero()) candidates.push_back(inverse(g[pr][pc]));
        candidates.push_back(one());
        for (int mte = 1; mte < dim(); ++mte) candidates.push_back(basis_element(mte));
        bool done = false;
        for (const auto& c : candidates) {
          AlgebraElement m = mul(g[pr][pc], c);
          AlgebraElement diag_val = add(m, involve(m));
          if (!nrd(diag_val).is_zero()) {
            add_row_col(pr, pc, c);
            swap_row_col(r, pr);
            done = true;
            break;
          }
        }
        if (!done)
          throw UnsupportedAlgebraShape(
              "hermitian reduction requires a division algebra for this input");
      }
    }
    AlgebraElement inv_p = inverse(g[r][r]);
    for (int s = r + 1; s < n; ++s) {
      if (is_zero(g[r][s])) continue;
      add_row_col(s, r, neg(mul(inv_p, g[r][s])));
    }
    diag.push_back(g[r][r]);
  }
  return diag;
}

std::string Algebra::element_to_string(const AlgebraElement& u) const {
  static const char* quat_names[4] = {"", "i", "j", "k"};
  static const char* etale_names[2] = {"", "w"};
  const auto& names = field_.variables();
  std::ostringstream os;
  bool first = true;
  for (int m = 0; m < dim(); ++m) {
    if (u.c[m].is_zero()) continue;
    const char* unit = kind_ == AlgebraKind::Quaternion ? quat_names[m]
                       : kind_ == AlgebraKind::QuadraticEtale ? etale_names[m]
                                                              : "";
    std::string coeff = u.c[m].to_string(names);
    bool neg_coeff = coeff.size() && coeff[0] == '-';
    if (!first) {
      os << (neg_coeff ? " - " : " + ");
      if (neg_coeff) coeff = coeff.substr(1);
    }
    bool needs_paren = coeff.find_first_of("+-") != std::string::npos &&
                       !(coeff.find_first_of("+-") == 0 &&
                         coeff.find_first_of("+-", 1) == std::string::npos);
    if (m == 0 || coeff != "1") {
      if (m != 0 && needs_paren)
        os << "(" << coeff << ")*";
      else if (m != 0)
        os << coeff << "*";
      else
        os << coeff;
    }
    os << unit;
    first = false;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace witt
