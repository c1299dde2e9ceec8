#include "witt/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "witt/errors.hpp"

namespace witt {

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

namespace {

Integer pollard_rho(const Integer& n) {
  // n odd composite, not a prime power of interest; Brent variant.
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xB5297A4DUL);
  while (true) {
    Integer y = rng.get_z_range(n - 2) + 1;
    Integer c = rng.get_z_range(n - 2) + 1;
    Integer x = y, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = witt::gcd(abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::vector<Integer>& out) {
  if (n <= 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 32) != 0) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> out;
  if (sgn(n) < 0) n = -n;
  if (n <= 1) return out;
  for (Integer p : {Integer(2), Integer(3), Integer(5), Integer(7), Integer(11), Integer(13)}) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  for (Integer p = 17; p * p <= n && p < 100000; p += 2) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
  return p;
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
  Polynomial p(static_cast<int>(e.size()));
  if (c != 0) p.terms_[e] = c;
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(e, 1);
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

const Exponents& Polynomial::min_monomial() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

const Rational& Polynomial::min_coefficient() const {
  assert(!terms_.empty());
  return terms_.begin()->second;
}

Exponents Polynomial::min_exponents() const {
  assert(!terms_.empty());
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Exponents Polynomial::max_exponents() const {
  assert(!terms_.empty());
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < nvars_; ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  assert(nvars_ == o.nvars_);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  assert(nvars_ == o.nvars_);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  assert(nvars_ == o.nvars_);
  Polynomial r(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Polynomial Polynomial::shifted(const Exponents& s) const {
  Polynomial r(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + s[i];
    r.terms_.emplace(e, c);
  }
  return r;
}

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& d) const {
  assert(nvars_ == d.nvars_);
  if (d.is_zero()) return std::nullopt;
  Polynomial q(nvars_);
  Polynomial r = *this;
  const Exponents dm = d.min_monomial();
  const Rational& dc = d.min_coefficient();
  // The quotient's exponents are bounded by those of the dividend; each step
  // strictly increases the dominant term of the remainder, so the loop ends.
  Exponents hi(nvars_, 0);
  if (!is_zero()) hi = max_exponents();
  while (!r.is_zero()) {
    const Exponents& rm = r.min_monomial();
    Exponents t(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      t[i] = rm[i] - dm[i];
      if (t[i] < 0 || t[i] > hi[i]) return std::nullopt;
    }
    Rational tc = r.min_coefficient() / dc;
    q.add_term(t, tc);
    r = r - d.shifted(t) * tc;
  }
  return q;
}

std::optional<Polynomial> Polynomial::square_root() const {
  if (is_zero()) return Polynomial(nvars_);
  const Exponents lo = min_exponents();
  const Exponents hi = max_exponents();
  for (int i = 0; i < nvars_; ++i)
    if (lo[i] % 2 != 0 || hi[i] % 2 != 0) return std::nullopt;

  const Exponents& m0 = min_monomial();
  for (int i = 0; i < nvars_; ++i)
    if (m0[i] % 2 != 0) return std::nullopt;
  const Rational& c0 = min_coefficient();
  if (!is_perfect_square(c0)) return std::nullopt;
  Rational rc(isqrt(c0.get_num()), isqrt(c0.get_den()));
  rc.canonicalize();
  Exponents re(nvars_);
  for (int i = 0; i < nvars_; ++i) re[i] = m0[i] / 2;

  Polynomial root = monomial(re, rc);
  Polynomial rem = *this - root * root;
  const Rational two_c0 = 2 * rc;
  while (!rem.is_zero()) {
    const Exponents& rm = rem.min_monomial();
    Exponents t(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      t[i] = rm[i] - re[i];
      // Every monomial of the root lies in the halved bounding box.
      if (t[i] < lo[i] / 2 || t[i] > hi[i] / 2) return std::nullopt;
    }
    Rational tc = rem.min_coefficient() / two_c0;
    Polynomial tmono = monomial(t, tc);
    rem = rem - root * tmono * Rational(2) - tmono * tmono;
    root = root + tmono;
  }
  return root;
}

int Polynomial::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int Polynomial::min_exponent_in(int var) const {
  assert(!terms_.empty());
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

Polynomial Polynomial::coefficient_of(int var, int k) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == k) {
      Exponents f = e;
      f[var] = 0;
      r.terms_.emplace(f, c);
    }
  }
  return r;
}

Polynomial Polynomial::min_slice_without(int var) const {
  assert(!terms_.empty());
  int k = min_exponent_in(var);
  Polynomial r(nvars_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exponents f;
    f.reserve(nvars_ - 1);
    for (int i = 0; i < nvars_; ++i)
      if (i != var) f.push_back(e[i]);
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  assert(static_cast<int>(point.size()) == nvars_);
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      Rational base = point[i];
      int k = e[i];
      if (k < 0) {
        if (base == 0) throw DivisionByZero();
        base = 1 / base;
        k = -k;
      }
      for (int j = 0; j < k; ++j) t *= base;
    }
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : terms_) den_lcm = lcm(den_lcm, c.get_den());
  for (const auto& [e, c] : terms_) num_gcd = witt::gcd(num_gcd, Integer(c.get_num() * (den_lcm / c.get_den())));
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (min_coefficient() * scale < 0) scale = -scale;
  return *this * scale;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      a = abs(a);
    }
    bool has_var = std::any_of(e.begin(), e.end(), [](int k) { return k != 0; });
    if (!has_var || a != 1) {
      os << a;
      if (has_var) os << "*";
    }
    bool firstv = true;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << names[i];
      if (e[i] != 1) os << "^" << e[i];
    }
    first = false;
  }
  return os.str();
}

namespace {

// Pseudo-remainder of a by b in the variable `var`.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, int var) {
  int db = b.degree_in(var);
  Polynomial lb = b.coefficient_of(var, db);
  int da = a.degree_in(var);
  while (!a.is_zero() && (da = a.degree_in(var)) >= db) {
    Polynomial la = a.coefficient_of(var, da);
    Exponents shift(a.nvars(), 0);
    shift[var] = da - db;
    a = a * lb - b.shifted(shift) * la;
  }
  return a;
}

// Content of a viewed as a univariate polynomial in `var`: the gcd of its
// coefficient polynomials.
Polynomial content_in(const Polynomial& a, int var) {
  Polynomial c(a.nvars());
  int d = a.degree_in(var);
  int lo = a.is_zero() ? 0 : a.min_exponent_in(var);
  for (int k = lo; k <= d; ++k) {
    Polynomial ck = a.coefficient_of(var, k);
    if (ck.is_zero()) continue;
    c = gcd(c, ck);
    if (c.is_constant() && !c.is_zero()) break;
  }
  return c;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  assert(a.nvars() == b.nvars());
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();

  // Split off monomial content so the recursion only sees true polynomials.
  Exponents ma = a.min_exponents(), mb = b.min_exponents();
  Exponents shared(a.nvars());
  bool any_shift = false;
  for (int i = 0; i < a.nvars(); ++i) {
    shared[i] = std::min(ma[i], mb[i]);
    if (ma[i] != 0 || mb[i] != 0) any_shift = true;
  }
  if (any_shift) {
    Exponents neg_a(a.nvars()), neg_b(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) {
      neg_a[i] = -ma[i];
      neg_b[i] = -mb[i];
    }
    Polynomial g = gcd(a.shifted(neg_a), b.shifted(neg_b));
    return g.shifted(shared).primitive();
  }

  int var = -1;
  for (int i = a.nvars(); i-- > 0;) {
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
      var = i;
      break;
    }
  }
  if (var < 0) return Polynomial::constant(a.nvars(), 1);  // both constants

  if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
    // One operand is free of the main variable: gcd divides its content.
    const Polynomial& flat = a.degree_in(var) == 0 ? a : b;
    const Polynomial& tall = a.degree_in(var) == 0 ? b : a;
    return gcd(flat, content_in(tall, var));
  }

  Polynomial ca = content_in(a, var);
  Polynomial cb = content_in(b, var);
  Polynomial cg = gcd(ca, cb);
  Polynomial pa = *a.divided_by(ca);
  Polynomial pb = *b.divided_by(cb);

  // Primitive PRS in the main variable.
  Polynomial r0 = pa, r1 = pb;
  if (r0.degree_in(var) < r1.degree_in(var)) std::swap(r0, r1);
  while (!r1.is_zero()) {
    Polynomial r2 = pseudo_remainder(r0, r1, var);
    if (!r2.is_zero()) {
      Polynomial c2 = content_in(r2, var);
      r2 = *r2.divided_by(c2);
    }
    r0 = r1;
    r1 = r2;
  }
  return (cg * r0).primitive();
}

}  // namespace witt
