// Hand-rolled random generators for property tests.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "symsos/families.hpp"
#include "symsos/polycore.hpp"
#include "symsos/repsn.hpp"
#include "symsos/symfunc.hpp"

namespace symsos::testgen {

inline Rational rational(std::mt19937_64& rng, int num = 9, int den = 5) {
  std::uniform_int_distribution<int> nd(-num, num), dd(1, den);
  Rational q(nd(rng), dd(rng));
  q.canonicalize();
  return q;
}

inline SparsePoly sparse_poly(std::mt19937_64& rng, int n, int max_deg, int terms) {
  SparsePoly f(n);
  std::uniform_int_distribution<int> deg(0, max_deg);
  for (int t = 0; t < terms; ++t) {
    Exponent e(n, 0);
    int d = deg(rng);
    std::uniform_int_distribution<int> var(0, n - 1);
    for (int k = 0; k < d; ++k) ++e[var(rng)];
    f.add_term(e, rational(rng));
  }
  return f;
}

inline SparsePoly homogeneous_poly(std::mt19937_64& rng, int n, int d, int terms) {
  SparsePoly f(n);
  std::uniform_int_distribution<int> var(0, n - 1);
  for (int t = 0; t < terms; ++t) {
    Exponent e(n, 0);
    for (int k = 0; k < d; ++k) ++e[var(rng)];
    f.add_term(e, rational(rng));
  }
  return f;
}

inline Partition partition(std::mt19937_64& rng, int N) {
  auto all = partitions_of(N);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

// Sum of random monomial-symmetric polynomials of degree d in n variables.
inline SparsePoly symmetric_poly(std::mt19937_64& rng, int n, int d) {
  SparsePoly f(n);
  for (const auto& lam : partitions_of(d, n))
    f += basis_poly(SymBasis::m, lam, n) * rational(rng);
  return f;
}

inline std::vector<Rational> point(std::mt19937_64& rng, int n) {
  std::vector<Rational> p;
  for (int i = 0; i < n; ++i) p.push_back(rational(rng, 4, 3));
  return p;
}

// sum over S_n of (g v)^2 for a random form v of degree d.
inline SparsePoly sos_symmetric_form(std::mt19937_64& rng, int n, int d, int terms) {
  SparsePoly v(n);
  while (v.is_zero()) v = homogeneous_poly(rng, n, d, terms);
  SparsePoly f(n);
  for (const auto& p : all_permutations(n)) {
    RationalMatrix P(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) P[i][p[i]] = 1;
    SparsePoly w = apply_linear_substitution(v, P);
    f += w * w;
  }
  return f;
}

// sum over S_n and k random dense forms v of (g v)^2; every monomial of v nonzero.
inline SparsePoly dense_sos_symmetric_form(std::mt19937_64& rng, int n, int d, int k) {
  SparsePoly f(n);
  for (int j = 0; j < k; ++j) {
    SparsePoly v(n);
    for (const auto& e : monomials(n, d)) {
      Rational c = 0;
      while (c == 0) c = rational(rng);
      v.add_term(e, c);
    }
    for (const auto& p : all_permutations(n)) {
      RationalMatrix P(n, std::vector<Rational>(n, Rational(0)));
      for (int i = 0; i < n; ++i) P[i][p[i]] = 1;
      SparsePoly w = apply_linear_substitution(v, P);
      f += w * w;
    }
  }
  return f;
}

// Random SOS quartic away from the degenerate loci where a block conic
// collapses: |a+2b+c+d| and |4a-b-2c+d| stay above 5% of the coefficient size.
inline QuarticFromBlocks generic_sos_quartic(std::mt19937_64& rng) {
  for (;;) {
    QuarticFromBlocks q = random_sos_quartic(rng);
    const auto& c = q.coeffs;
    double scale = std::max({std::abs(c.a.get_d()), std::abs(c.b.get_d()), std::abs(c.c.get_d()),
                             std::abs(c.d.get_d())});
    double s1 = std::abs(Rational(c.a + 2 * c.b + c.c + c.d).get_d());
    double s2 = std::abs(Rational(4 * c.a - c.b - 2 * c.c + c.d).get_d());
    if (s1 > 0.05 * scale && s2 > 0.05 * scale) return q;
  }
}

}  // namespace symsos::testgen
