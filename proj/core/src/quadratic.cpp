#include "witt/quadratic.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace witt {

namespace {

long valuation_at_prime(const Rational& a, const Integer& p) {
  long v = 0;
  Integer n = a.get_num();
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  Integer d = a.get_den();
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

// The p-unit part of a, as the pair (odd numerator, odd denominator).
std::pair<Integer, Integer> unit_part(const Rational& a, const Integer& p) {
  Integer n = a.get_num(), d = a.get_den();
  while (n % p == 0) n /= p;
  while (d % p == 0) d /= p;
  return {n, d};
}

int legendre_of_unit(const std::pair<Integer, Integer>& u, const Integer& p) {
  Integer m = u.first * u.second;
  return mpz_legendre(m.get_mpz_t(), p.get_mpz_t());
}

// u odd rational; residue class of u mod 8 via num * den (den^2 = 1 mod 8).
long mod8_of_unit(const std::pair<Integer, Integer>& u) {
  Integer m = u.first * u.second;
  long r = mpz_fdiv_ui(m.get_mpz_t(), 8);
  return r;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (a == 0 || b == 0) throw Error("hilbert symbol requires nonzero arguments");
  if (place.is_infinite) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  const Integer& p = place.prime;
  long alpha = valuation_at_prime(a, p);
  long beta = valuation_at_prime(b, p);
  auto u = unit_part(a, p);
  auto w = unit_part(b, p);
  if (p == 2) {
    long um = mod8_of_unit(u), wm = mod8_of_unit(w);
    long eps_u = (um % 4 == 3) ? 1 : 0;  // (u-1)/2 mod 2
    long eps_w = (wm % 4 == 3) ? 1 : 0;
    long om_u = (um == 3 || um == 5) ? 1 : 0;  // (u^2-1)/8 mod 2
    long om_w = (wm == 3 || wm == 5) ? 1 : 0;
    long e = eps_u * eps_w + alpha * om_w + beta * om_u;
    return e % 2 == 0 ? 1 : -1;
  }
  int r = 1;
  if ((alpha * beta) % 2 != 0 && p % 4 == 3) r = -r;  // legendre(-1, p)^(ab)
  if (beta % 2 != 0) r *= legendre_of_unit(u, p);
  if (alpha % 2 != 0) r *= legendre_of_unit(w, p);
  return r;
}

WittPrimeIdeal WittPrimeIdeal::sign_kernel(Ordering P) {
  WittPrimeIdeal I;
  I.kind = Kind::SignKernel;
  I.P = std::move(P);
  return I;
}

WittPrimeIdeal WittPrimeIdeal::mod_p_kernel(Ordering P, Integer p) {
  if (p <= 2 || mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
    throw Error("mod-p Witt ideal requires an odd prime");
  WittPrimeIdeal I;
  I.kind = Kind::ModPKernel;
  I.P = std::move(P);
  I.p = std::move(p);
  return I;
}

WittPrimeIdeal WittPrimeIdeal::fundamental() { return WittPrimeIdeal{}; }

bool WittPrimeIdeal::contains(const QuadraticForm& q) const {
  switch (kind) {
    case Kind::SignKernel:
      return q.signature_at(P) == 0;
    case Kind::ModPKernel: {
      Integer s(q.signature_at(P));
      return s % p == 0;
    }
    case Kind::Fundamental:
      return q.dimension() % 2 == 0;
  }
  return false;
}

std::string WittPrimeIdeal::to_string() const {
  switch (kind) {
    case Kind::SignKernel:
      return "ker sign(" + P.to_string() + ")";
    case Kind::ModPKernel:
      return "ker sign(" + P.to_string() + ") mod " + p.get_str();
    case Kind::Fundamental:
      return "I(F)";
  }
  return "?";
}

QuadraticForm::QuadraticForm(FieldTower field, std::vector<FieldElement> entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.is_zero()) throw Error("quadratic form entries must be nonzero");
    if (e.nvars() != field_.height()) throw FieldMismatch();
  }
}

QuadraticForm QuadraticForm::diagonalize(const FieldTower& field,
                                         std::vector<std::vector<FieldElement>> g) {
  const int n = static_cast<int>(g.size());
  for (const auto& row : g)
    if (static_cast<int>(row.size()) != n) throw Error("Gram matrix must be square");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(g[i][j] == g[j][i])) throw Error("Gram matrix must be symmetric");

  auto add_row_col = [&](int dst, int src, const FieldElement& c) {
    for (int t = 0; t < n; ++t) g[dst][t] = g[dst][t] + c * g[src][t];
    for (int t = 0; t < n; ++t) g[t][dst] = g[t][dst] + g[t][src] * c;
  };
  auto swap_row_col = [&](int a, int b) {
    if (a == b) return;
    std::swap(g[a], g[b]);
    for (int t = 0; t < n; ++t) std::swap(g[t][a], g[t][b]);
  };

  std::vector<FieldElement> diag;
  const FieldElement one = FieldElement::one(field.height());
  for (int r = 0; r < n; ++r) {
    if (g[r][r].is_zero()) {
      int pivot = -1;
      for (int s = r + 1; s < n; ++s)
        if (!g[s][s].is_zero()) {
          pivot = s;
          break;
        }
      if (pivot >= 0) {
        swap_row_col(r, pivot);
      } else {
        int pr = -1, pc = -1;
        for (int s = r; s < n && pr < 0; ++s)
          for (int t = s + 1; t < n; ++t)
            if (!g[s][t].is_zero()) {
              pr = s;
              pc = t;
              break;
            }
        if (pr < 0) throw SingularForm();
        add_row_col(pr, pc, one);  // diagonal becomes 2*g[pr][pc]
        swap_row_col(r, pr);
      }
    }
    FieldElement inv = g[r][r].inverse();
    for (int s = r + 1; s < n; ++s) {
      if (g[r][s].is_zero()) continue;
      add_row_col(s, r, -(g[r][s] * inv));
    }
    diag.push_back(g[r][r]);
  }
  return QuadraticForm(field, std::move(diag));
}

long QuadraticForm::signature_at(const Ordering& P) const {
  long s = 0;
  for (const auto& e : entries_) s += e.sign_at(P);
  return s;
}

std::vector<std::pair<Ordering, long>> QuadraticForm::signature_vector() const {
  std::vector<std::pair<Ordering, long>> out;
  for (const auto& P : enumerate_orderings(field_)) out.emplace_back(P, signature_at(P));
  return out;
}

std::pair<QuadraticForm, QuadraticForm> QuadraticForm::springer_residues() const {
  const int h = field_.height();
  if (h < 1) throw Error("springer residues require tower height >= 1");
  const int outer = h - 1;
  FieldTower down(field_.base(),
                  std::vector<std::string>(field_.variables().begin(),
                                           field_.variables().end() - 1));
  std::vector<FieldElement> even, odd;
  for (const auto& e : entries_) {
    long k = e.valuation().twice()[outer] / 2;
    FieldElement u = e.leading_unit_residue(outer);
    (k % 2 == 0 ? even : odd).push_back(std::move(u));
  }
  return {QuadraticForm(down, std::move(even)), QuadraticForm(down, std::move(odd))};
}

namespace {

bool rational_witt_zero(const std::vector<Rational>& a) {
  const int n = static_cast<int>(a.size());
  if (n % 2 != 0) return false;
  long sig = 0;
  for (const auto& c : a) sig += sgn(c);
  if (sig != 0) return false;

  const int m = n / 2;
  // Signed determinant test: det(q) * det(H^m)^-1 must be a square, where
  // det(H^m) = (-1)^m.
  Rational det = 1;
  for (const auto& c : a) det *= c;
  if (m % 2 != 0) det = -det;
  if (!is_perfect_square(det)) return false;

  std::set<Integer> primes{Integer(2)};
  for (const auto& c : a) {
    for (const auto& p : prime_factors(c.get_num())) primes.insert(p);
    for (const auto& p : prime_factors(c.get_den())) primes.insert(p);
  }
  std::vector<Rational> hyp;
  for (int i = 0; i < m; ++i) {
    hyp.emplace_back(1);
    hyp.emplace_back(-1);
  }
  auto hasse = [](const std::vector<Rational>& f, const Place& pl) {
    int s = 1;
    for (size_t i = 0; i < f.size(); ++i)
      for (size_t j = i + 1; j < f.size(); ++j) s *= hilbert_symbol(f[i], f[j], pl);
    return s;
  };
  for (const auto& p : primes) {
    Place pl = Place::finite(p);
    if (hasse(a, pl) != hasse(hyp, pl)) return false;
  }
  return true;
}

}  // namespace

bool QuadraticForm::is_witt_zero() const {
  if (entries_.empty()) return true;
  if (field_.height() > 0) {
    auto [even, odd] = springer_residues();
    return even.is_witt_zero() && odd.is_witt_zero();
  }
  if (field_.base() == BaseField::RealClosedSurrogate) {
    return signature_at(Ordering{}) == 0;
  }
  std::vector<Rational> a;
  a.reserve(entries_.size());
  for (const auto& e : entries_) a.push_back(e.as_rational());
  return rational_witt_zero(a);
}

bool QuadraticForm::is_torsion() const {
  for (const auto& [P, s] : signature_vector())
    if (s != 0) return false;
  return true;
}

QuadraticForm QuadraticForm::operator+(const QuadraticForm& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch();
  std::vector<FieldElement> e = entries_;
  e.insert(e.end(), o.entries_.begin(), o.entries_.end());
  return QuadraticForm(field_, std::move(e));
}

QuadraticForm QuadraticForm::operator*(const QuadraticForm& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch();
  std::vector<FieldElement> e;
  e.reserve(entries_.size() * o.entries_.size());
  for (const auto& u : entries_)
    for (const auto& v : o.entries_) e.push_back(u * v);
  return QuadraticForm(field_, std::move(e));
}

QuadraticForm QuadraticForm::operator-() const {
  std::vector<FieldElement> e;
  e.reserve(entries_.size());
  for (const auto& u : entries_) e.push_back(-u);
  return QuadraticForm(field_, std::move(e));
}

QuadraticForm QuadraticForm::scaled(const FieldElement& c) const {
  if (c.is_zero()) throw Error("cannot scale a form by zero");
  std::vector<FieldElement> e;
  e.reserve(entries_.size());
  for (const auto& u : entries_) e.push_back(u * c);
  return QuadraticForm(field_, std::move(e));
}

std::string QuadraticForm::to_string() const {
  std::ostringstream os;
  os << "<";
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ", ";
    os << entries_[i].to_string(field_.variables());
  }
  os << ">";
  return os.str();
}

QuadraticForm indicator_form(const FieldTower& field, const Ordering& P) {
  const int h = field.height();
  QuadraticForm acc(field, {FieldElement::one(h)});
  for (int i = 0; i < h; ++i) {
    FieldElement t = FieldElement::variable(h, i);
    if (P.signs[i] < 0) t = -t;
    QuadraticForm factor(field, {FieldElement::one(h), std::move(t)});
    acc = acc * factor;
  }
  return acc;
}

QuadraticForm realize_positive_pattern(const FieldTower& field,
                                       const std::map<Ordering, int>& f) {
  QuadraticForm acc(field, {});
  for (const auto& P : enumerate_orderings(field)) {
    auto it = f.find(P);
    int want = it == f.end() ? 1 : it->second;
    QuadraticForm ind = indicator_form(field, P);
    acc = acc + (want < 0 ? -ind : ind);
  }
  return acc;
}

QuadraticForm realize_vanishing_pattern(const FieldTower& field,
                                        const std::set<Ordering>& U) {
  QuadraticForm acc(field, {});
  for (const auto& P : enumerate_orderings(field)) {
    if (U.count(P)) continue;
    acc = acc + indicator_form(field, P);
  }
  return acc;
}

}  // namespace witt
