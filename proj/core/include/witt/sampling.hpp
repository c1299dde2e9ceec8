#pragma once

#include <random>

#include "witt/hermitian.hpp"

namespace witt {

// Deterministic sample generator for property checks. Uses its own modulo
// reduction so that streams are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(unsigned long seed) : rng_(seed) {}

  long uniform(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(rng_() % static_cast<unsigned long>(hi - lo + 1));
  }

  Rational small_rational(bool nonzero = true) {
    long n = uniform(-4, 4);
    if (nonzero)
      while (n == 0) n = uniform(-4, 4);
    long d = uniform(1, 3);
    return Rational(n, d);
  }

  FieldElement field_element(const FieldTower& tower, int max_terms = 2, int max_deg = 2,
                             bool nonzero = true) {
    const int h = tower.height();
    Polynomial p(h);
    int terms = static_cast<int>(uniform(1, max_terms));
    for (int t = 0; t < terms; ++t) {
      Exponents e(h);
      for (int i = 0; i < h; ++i) e[i] = static_cast<int>(uniform(0, max_deg));
      p.add_term(e, small_rational());
    }
    if (nonzero && p.is_zero()) p = Polynomial::constant(h, 1);
    return FieldElement::fraction(std::move(p), Polynomial::constant(h, 1));
  }

  QuadraticForm quadratic_form(const FieldTower& tower, int max_dim = 3) {
    int dim = static_cast<int>(uniform(1, max_dim));
    std::vector<FieldElement> entries;
    for (int i = 0; i < dim; ++i) entries.push_back(field_element(tower));
    return QuadraticForm(tower, std::move(entries));
  }

  AlgebraElement symmetric_unit(const Algebra& A) {
    auto basis = A.sym_basis();
    for (int attempt = 0; attempt < 64; ++attempt) {
      AlgebraElement u = A.zero();
      for (const auto& b : basis) {
        if (uniform(0, 2) == 0) continue;
        u = A.add(u, A.scale(field_element(A.field(), 1, 1), b));
      }
      if (!A.is_zero(u) && !A.nrd(u).is_zero()) return u;
    }
    return A.one();
  }

  HermitianForm hermitian_form(const Algebra& A, int max_rank = 3) {
    int rank = static_cast<int>(uniform(1, max_rank));
    std::vector<AlgebraElement> entries;
    for (int i = 0; i < rank; ++i) entries.push_back(symmetric_unit(A));
    return HermitianForm(A, std::move(entries));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace witt
