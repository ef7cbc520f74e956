#include <gtest/gtest.h>

#include "generators.hpp"
#include "symsos/symfunc.hpp"

using namespace symsos;

TEST(Symfunc, PartitionCountsAndOrder) {
  EXPECT_EQ(partitions_of(8).size(), 22u);
  EXPECT_EQ(partitions_of(10).size(), 42u);
  auto p4 = partitions_of(4);
  ASSERT_EQ(p4.size(), 5u);
  EXPECT_EQ(p4.front().to_string(), "4");
  EXPECT_EQ(p4.back().to_string(), "1,1,1,1");
  EXPECT_EQ(partitions_of(6, 3).size(), 7u);
}

TEST(Symfunc, ParseValidates) {
  EXPECT_EQ(Partition::parse("(5, 2, 1)").parts(), (std::vector<int>{5, 2, 1}));
  EXPECT_THROW(Partition::parse("1,2"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("3,0"), std::invalid_argument);
}

TEST(Symfunc, Dominance) {
  auto P = [](const char* s) { return Partition::parse(s); };
  EXPECT_EQ(dominance(P("5,2,1"), P("4,4")), Dominance::Incomparable);
  EXPECT_EQ(dominance(P("1,1,1"), P("2,1")), Dominance::Less);
  EXPECT_EQ(dominance(P("3"), P("2,1")), Dominance::Greater);
  EXPECT_EQ(dominance(P("2,2"), P("2,2")), Dominance::Equal);
}

TEST(SymfuncProperty, ConjugationReversesDominance) {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 300; ++it) {
    int N = 1 + it % 9;
    Partition a = testgen::partition(rng, N), b = testgen::partition(rng, N);
    EXPECT_EQ(a.conjugate().conjugate(), a);
    Dominance d = dominance(a, b), dc = dominance(a.conjugate(), b.conjugate());
    if (d == Dominance::Less) EXPECT_EQ(dc, Dominance::Greater);
    if (d == Dominance::Greater) EXPECT_EQ(dc, Dominance::Less);
    if (d == Dominance::Incomparable) EXPECT_EQ(dc, Dominance::Incomparable);
  }
}

TEST(Symfunc, BasisPolynomialsSmallCases) {
  auto P = [](const char* s) { return Partition::parse(s); };
  // s_{2,1} = m_{2,1} + 2 m_{1,1,1}
  SparsePoly s21 = basis_poly(SymBasis::s, P("2,1"), 3);
  SparsePoly want = basis_poly(SymBasis::m, P("2,1"), 3) +
                    basis_poly(SymBasis::m, P("1,1,1"), 3) * Rational(2);
  EXPECT_EQ(s21, want);
  // h_2 = m_2 + m_{1,1}; e_2 = m_{1,1}; p_2 = m_2
  EXPECT_EQ(basis_poly(SymBasis::h, P("2"), 3),
            basis_poly(SymBasis::m, P("2"), 3) + basis_poly(SymBasis::m, P("1,1"), 3));
  EXPECT_EQ(basis_poly(SymBasis::e, P("2"), 3), basis_poly(SymBasis::m, P("1,1"), 3));
  EXPECT_EQ(basis_poly(SymBasis::p, P("2"), 3), basis_poly(SymBasis::m, P("2"), 3));
  // too many parts
  EXPECT_TRUE(basis_poly(SymBasis::s, P("1,1,1,1"), 3).is_zero());
  EXPECT_TRUE(basis_poly(SymBasis::m, P("1,1,1,1"), 3).is_zero());
}

TEST(SymfuncProperty, NewtonAndDualityIdentities) {
  // sum_{i} (-1)^i e_i h_{k-i} = 0 and s_(k) = h_k, s_(1^k) = e_k
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 5; ++k) {
      SparsePoly acc(n);
      for (int i = 0; i <= k; ++i) {
        SparsePoly e = i == 0 ? SparsePoly::constant(n, 1)
                              : basis_poly(SymBasis::e, Partition({i}), n);
        SparsePoly h = k - i == 0 ? SparsePoly::constant(n, 1)
                                  : basis_poly(SymBasis::h, Partition({k - i}), n);
        acc += (i % 2 ? Rational(-1) : Rational(1)) * (e * h);
      }
      EXPECT_TRUE(acc.is_zero()) << "n=" << n << " k=" << k;
      EXPECT_EQ(basis_poly(SymBasis::s, Partition({k}), n), basis_poly(SymBasis::h, Partition({k}), n));
      EXPECT_EQ(basis_poly(SymBasis::s, Partition(std::vector<int>(k, 1)), n),
                basis_poly(SymBasis::e, Partition({k}), n));
    }
}

TEST(SymfuncProperty, TermNormalizedIsOneAtOnes) {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 80; ++it) {
    int N = 1 + it % 6, n = 1 + it % 4;
    Partition lam = testgen::partition(rng, N);
    for (SymBasis b : {SymBasis::h, SymBasis::p, SymBasis::e, SymBasis::m, SymBasis::s}) {
      SparsePoly g = basis_poly(b, lam, n);
      if (g.is_zero()) {
        EXPECT_THROW(term_normalize(g), std::domain_error);
        continue;
      }
      SparsePoly G = term_normalize(g);
      EXPECT_EQ(eval(G, std::vector<Rational>(n, Rational(1))), Rational(1));
    }
  }
}

TEST(Symfunc, ExampleDifferenceOfNormalizedH) {
  // (H_{2,1} - H_{1,1,1})(x^2)
  SparsePoly g = term_normalize(basis_poly(SymBasis::h, Partition({2, 1}), 3)) -
                 term_normalize(basis_poly(SymBasis::h, Partition({1, 1, 1}), 3));
  SparsePoly f = parse_poly("1/54*x1^6 + 1/54*x2^6 + 1/54*x3^6 - 1/18*x1^2*x2^2*x3^2", 3);
  EXPECT_EQ(substitute_squares(g), f);
}
