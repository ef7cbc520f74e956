#include <gtest/gtest.h>

#include "generators.hpp"
#include "symsos/certify.hpp"
#include "symsos/families.hpp"
#include "symsos/gramspec.hpp"

using namespace symsos;

TEST(Gramspec, ConeDimension) {
  EXPECT_EQ(cone_dimension({2, 2, 0}), 6);
  EXPECT_EQ(cone_dimension({3, 3, 1}), 13);
  for (int d = 0; d <= 15; ++d) {
    GroupRep rep = GroupRep::symmetric(2, d);
    int want = d % 2 ? (d + 1) * (d + 3) / 4 : (d + 2) * (d + 2) / 4;
    EXPECT_EQ(cone_dimension(rep.multiplicities()), want) << d;
  }
}

TEST(Gramspec, QuadraticBlocks) {
  // a sum x_i^2 + 2b sum x_i x_j has blocks a+(n-1)b and a-b
  for (int n = 2; n <= 4; ++n) {
    SparsePoly f = quadratic_poly(Rational(3), Rational(1, 2), n);
    CertifyContext ctx = prepare(f, GroupRep::symmetric(n, 1));
    EXPECT_EQ(ctx.spec.num_params(), 0);
    auto blocks = ctx.spec.block_values(Eigen::VectorXd());
    ASSERT_EQ(blocks.size(), 2u);
    EXPECT_NEAR(blocks[0](0, 0), 3 + (n - 1) * 0.5, 1e-12);
    EXPECT_NEAR(blocks[1](0, 0), 2.5, 1e-12);
  }
}

TEST(Gramspec, ExactRouteNamesPairOrbitParameters) {
  SparsePoly f = QuarticCoeffs{1, 0, 1, 0}.poly();
  CertifyContext ctx = prepare(f, GroupRep::symmetric(3, 2));
  EXPECT_TRUE(ctx.spec.exact);
  EXPECT_EQ(ctx.spec.free_params, (std::vector<std::string>{"q12", "q16"}));
}

TEST(GramspecProperty, AffineFamilyReproducesF) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 20; ++it) {
    int n = 2 + it % 3, d = 1 + it % 3;
    if (n == 4 && d == 3) d = 2;
    SparsePoly f = testgen::symmetric_poly(rng, n, 2 * d);
    if (f.is_zero()) continue;
    CertifyContext ctx = prepare(f, GroupRep::symmetric(n, d));
    std::normal_distribution<double> normal;
    Eigen::VectorXd p(ctx.spec.num_params());
    for (int k = 0; k < p.size(); ++k) p(k) = normal(rng);
    auto blocks = ctx.spec.block_values(p);
    EXPECT_LE(ctx.spec.constraint_residual(blocks), 1e-9);
    Eigen::MatrixXd Q = ctx.spec.gram(p);
    EXPECT_LE(max_coeff_diff(gram_polynomial(Q, ctx.spec.basis), to_real(f)), 1e-9);
    // the monomial Gram matrix is invariant
    EXPECT_LE((reynolds(Q, ctx.rep) - Q).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(GramspecProperty, ReynoldsProjectsOntoInvariantMatrices) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> normal;
  GroupRep rep = orthogonalized(GroupRep::symmetric(3, 2));
  for (int it = 0; it < 10; ++it) {
    Eigen::MatrixXd A(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) A(i, j) = normal(rng);
    Eigen::MatrixXd Q = reynolds(A + A.transpose(), rep);
    EXPECT_LE((reynolds(Q, rep) - Q).cwiseAbs().maxCoeff(), 1e-12);
    for (std::size_t g = 0; g < rep.group().order(); ++g)
      EXPECT_LE((rep.action(g).transpose() * Q * rep.action(g) - Q).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Gramspec, TrivialBlockFromOrbitSums) {
  // invariant Q for S_3 acting on degree-2 monomials in orbit order
  GroupRep rep = GroupRep::symmetric(3, 2);
  std::mt19937_64 rng(43);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd A(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) A(i, j) = normal(rng);
  Eigen::MatrixXd Q = reynolds(A + A.transpose(), rep);
  auto orbits = monomial_orbits(3, 2);
  Eigen::MatrixXd B = trivial_block(Q, orbits);
  // same block via normalized orbit indicator vectors
  Eigen::MatrixXd V = Eigen::MatrixXd::Zero(6, orbits.size());
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (int i : orbits[o]) V(i, o) = 1.0 / std::sqrt(static_cast<double>(orbits[o].size()));
  EXPECT_LE((B - V.transpose() * Q * V).cwiseAbs().maxCoeff(), 1e-12);
  Eigen::MatrixXd bad = A;
  EXPECT_THROW(trivial_block(bad, orbits), std::invalid_argument);
}

TEST(Gramspec, ExtremalRays) {
  GroupRep rep = GroupRep::symmetric(3, 2);
  SymAdaptedBasis sab = symmetry_adapted_basis(orthogonalized(rep));
  auto ranks = extremal_ray_ranks(sab.layout);
  EXPECT_EQ(ranks, (std::set<int>{1, 2}));
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(2, 2);
  Eigen::MatrixXd r1(2, 2);
  r1 << 1, 1, 1, 1;
  EXPECT_TRUE(is_extremal({r1, z}));
  EXPECT_FALSE(is_extremal({r1, r1}));
  EXPECT_FALSE(is_extremal({Eigen::MatrixXd::Identity(2, 2), z}));
}

TEST(Gramspec, RejectsNonInvariantInput) {
  SparsePoly f = parse_poly("x1^4 + x2^4", 3);
  EXPECT_THROW(prepare(f, GroupRep::symmetric(3, 2)), std::invalid_argument);
}
