#include "witt/field.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace witt {

FieldTower::FieldTower(BaseField base, std::vector<std::string> variables)
    : base_(base), variables_(std::move(variables)) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw Error("tower variable names must be nonempty");
    if (!seen.insert(v).second) throw Error("tower variable names must be distinct: " + v);
  }
}

std::string FieldTower::to_string() const {
  std::string s = base_ == BaseField::Rationals ? "Q" : "R";
  if (variables_.empty()) return s;
  s += "[[";
  for (size_t i = 0; i < variables_.size(); ++i) {
    if (i) s += ",";
    s += variables_[i];
  }
  s += "]]";
  return s;
}

std::string Ordering::to_string() const {
  std::string s;
  for (int8_t v : signs) s += (v > 0 ? '+' : '-');
  return s;
}

std::vector<Ordering> enumerate_orderings(const FieldTower& tower) {
  const int h = tower.height();
  std::vector<Ordering> out;
  out.reserve(size_t{1} << h);
  for (unsigned long mask = 0; mask < (1ul << h); ++mask) {
    Ordering P;
    P.signs.resize(h);
    for (int i = 0; i < h; ++i) P.signs[i] = (mask >> i) & 1 ? -1 : 1;
    out.push_back(std::move(P));
  }
  return out;
}

ValueVector ValueVector::integral(const std::vector<long>& v) {
  std::vector<long> t(v.size());
  for (size_t i = 0; i < v.size(); ++i) t[i] = 2 * v[i];
  return ValueVector(std::move(t));
}

bool ValueVector::is_integral() const {
  return std::all_of(twice_.begin(), twice_.end(), [](long v) { return v % 2 == 0; });
}

bool ValueVector::is_zero() const {
  return std::all_of(twice_.begin(), twice_.end(), [](long v) { return v == 0; });
}

ValueVector ValueVector::operator+(const ValueVector& o) const {
  assert(twice_.size() == o.twice_.size());
  std::vector<long> t(twice_.size());
  for (size_t i = 0; i < twice_.size(); ++i) t[i] = twice_[i] + o.twice_[i];
  return ValueVector(std::move(t));
}

ValueVector ValueVector::operator-(const ValueVector& o) const {
  assert(twice_.size() == o.twice_.size());
  std::vector<long> t(twice_.size());
  for (size_t i = 0; i < twice_.size(); ++i) t[i] = twice_[i] - o.twice_[i];
  return ValueVector(std::move(t));
}

ValueVector ValueVector::half() const {
  std::vector<long> t(twice_.size());
  for (size_t i = 0; i < twice_.size(); ++i) {
    if (twice_[i] % 2 != 0) throw Error("value vector not divisible by 2");
    t[i] = twice_[i] / 2;
  }
  return ValueVector(std::move(t));
}

bool ValueVector::operator<(const ValueVector& o) const {
  assert(twice_.size() == o.twice_.size());
  for (size_t i = twice_.size(); i-- > 0;) {
    if (twice_[i] != o.twice_[i]) return twice_[i] < o.twice_[i];
  }
  return false;
}

std::vector<int> ValueVector::coset_mod_integral() const {
  std::vector<int> c(twice_.size());
  for (size_t i = 0; i < twice_.size(); ++i) c[i] = ((twice_[i] % 2) + 2) % 2;
  return c;
}

std::string ValueVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < twice_.size(); ++i) {
    if (i) os << ", ";
    if (twice_[i] % 2 == 0)
      os << twice_[i] / 2;
    else
      os << twice_[i] << "/2";
  }
  os << ")";
  return os.str();
}

FieldElement FieldElement::zero(int nvars) {
  return FieldElement(Polynomial(nvars), Polynomial::constant(nvars, 1));
}

FieldElement FieldElement::one(int nvars) { return from_rational(nvars, 1); }

FieldElement FieldElement::from_rational(int nvars, const Rational& c) {
  return FieldElement(Polynomial::constant(nvars, c), Polynomial::constant(nvars, 1));
}

FieldElement FieldElement::variable(int nvars, int index) {
  return FieldElement(Polynomial::variable(nvars, index), Polynomial::constant(nvars, 1));
}

FieldElement FieldElement::make_normalized(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero();
  const int n = num.nvars();
  if (num.is_zero()) return zero(n);

  // Clear Laurent exponents by a common monomial shift.
  Exponents mn = num.min_exponents(), md = den.min_exponents();
  Exponents shift(n, 0);
  bool shifting = false;
  for (int i = 0; i < n; ++i) {
    int low = std::min(mn[i], md[i]);
    if (low < 0) {
      shift[i] = -low;
      shifting = true;
    }
  }
  if (shifting) {
    num = num.shifted(shift);
    den = den.shifted(shift);
  }

  Polynomial g = gcd(num, den);
  num = *num.divided_by(g);
  den = *den.divided_by(g);
  Rational lead = den.min_coefficient();
  num = num * (1 / lead);
  den = den * (1 / lead);
  return FieldElement(std::move(num), std::move(den));
}

FieldElement FieldElement::fraction(Polynomial num, Polynomial den) {
  return make_normalized(std::move(num), std::move(den));
}

bool FieldElement::is_one() const {
  return num_.is_constant() && den_.is_constant() && !num_.is_zero() &&
         num_.min_coefficient() == 1;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return make_normalized(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return make_normalized(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  return make_normalized(num_ * o.num_, den_ * o.den_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  if (o.is_zero()) throw DivisionByZero();
  return make_normalized(num_ * o.den_, den_ * o.num_);
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.num_ = -r.num_;
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return make_normalized(den_, num_);
}

FieldElement FieldElement::pow(long k) const {
  if (k == 0) return one(nvars());
  FieldElement base = k < 0 ? inverse() : *this;
  long e = k < 0 ? -k : k;
  FieldElement acc = one(nvars());
  for (long i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

namespace {

int sign_of_polynomial(const Polynomial& p, const Ordering& P) {
  if (p.is_zero()) return 0;
  const Exponents& e = p.min_monomial();
  int s = sign_of(p.min_coefficient());
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] % 2 != 0 && P.signs[i] < 0) s = -s;
  }
  return s;
}

}  // namespace

int FieldElement::sign_at(const Ordering& P) const {
  assert(static_cast<int>(P.signs.size()) == nvars());
  if (is_zero()) return 0;
  return sign_of_polynomial(num_, P) * sign_of_polynomial(den_, P);
}

ValueVector FieldElement::valuation() const {
  if (is_zero()) throw ZeroElement("valuation of zero is undefined");
  const Exponents& n = num_.min_monomial();
  const Exponents& d = den_.min_monomial();
  std::vector<long> v(n.size());
  for (size_t i = 0; i < n.size(); ++i) v[i] = n[i] - d[i];
  return ValueVector::integral(v);
}

FieldElement FieldElement::leading_unit_residue(int var) const {
  if (is_zero()) throw ZeroElement("residue of zero is undefined");
  assert(var >= 0 && var < nvars());
  Polynomial n = num_.min_slice_without(var);
  Polynomial d = den_.min_slice_without(var);
  return make_normalized(std::move(n), std::move(d));
}

bool FieldElement::is_square() const {
  if (is_zero()) return true;
  // num/den = (num*den)/den^2, so the element is a square iff num*den is a
  // square polynomial.
  return (num_ * den_).square_root().has_value();
}

Rational FieldElement::as_rational() const {
  assert(nvars() == 0);
  if (num_.is_zero()) return 0;
  return num_.min_coefficient() / den_.min_coefficient();
}

std::string FieldElement::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::string n = num_.to_string(names);
  if (den_.is_constant()) {
    if (den_.min_coefficient() == 1) return n;
  }
  std::string d = den_.to_string(names);
  bool n_atom = num_.is_monomial();
  bool d_atom = den_.is_monomial();
  std::string out = n_atom ? n : "(" + n + ")";
  out += "/";
  out += d_atom ? d : "(" + d + ")";
  return out;
}

}  // namespace witt
