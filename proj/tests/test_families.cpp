#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "symsos/certify.hpp"
#include "symsos/families.hpp"

using namespace symsos;

// ---------------------------------------------------------------- binary

TEST(Binary, ChangeOfBasisIsOrthogonal) {
  for (int d = 1; d <= 8; ++d) {
    Eigen::MatrixXd T = binary_change_of_basis(d);
    EXPECT_LE((T.transpose() * T - Eigen::MatrixXd::Identity(d + 1, d + 1)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(BinaryProperty, BlocksReassemble) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  for (int d = 1; d <= 8; ++d) {
    int N = d + 1;
    Eigen::MatrixXd A(N, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) A(i, j) = normal(rng);
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(N, N);
    for (int i = 0; i < N; ++i) J(i, N - 1 - i) = 1;
    Eigen::MatrixXd q = A + A.transpose();
    q = (q + J * q * J).eval();
    auto [triv, alt] = binary_blocks(d, q);
    EXPECT_EQ(triv.rows(), d % 2 ? (d + 1) / 2 : d / 2 + 1);
    EXPECT_EQ(triv.rows() + alt.rows(), N);
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(N, N);
    D.topLeftCorner(triv.rows(), triv.rows()) = triv;
    D.bottomRightCorner(alt.rows(), alt.rows()) = alt;
    Eigen::MatrixXd T = binary_change_of_basis(d);
    EXPECT_LE((T * D * T.transpose() - q).cwiseAbs().maxCoeff(), 1e-12);
    Eigen::MatrixXd skew = q;
    skew(0, 0) += 1;
    EXPECT_THROW(binary_blocks(d, skew), std::invalid_argument);
  }
}

// ------------------------------------------------------------- quadratic

TEST(Quadratic, ClosedForms) {
  auto r = quadratic_analyze(1, 0, 4);
  EXPECT_TRUE(r.sos);
  EXPECT_EQ(r.rank, 4);
  r = quadratic_analyze(1, 1, 4);  // (x1+...+x4)^2
  EXPECT_TRUE(r.sos && r.upper_boundary);
  EXPECT_EQ(r.rank, 1);
  r = quadratic_analyze(3, -1, 4);  // on the lower face
  EXPECT_TRUE(r.sos && r.lower_boundary);
  EXPECT_EQ(r.rank, 3);
  EXPECT_FALSE(quadratic_analyze(1, 2, 4).sos);
  EXPECT_EQ(quadratic_analyze(0, 0, 5).rank, 0);
  EXPECT_NEAR(quadratic_sos_ratio(2), 0.25, 1e-15);
  EXPECT_NEAR(quadratic_sos_ratio(1e6), 0.125, 1e-6);
}

TEST(QuadraticProperty, MatchesEigenvalueOracle) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> nd(2, 12);
  for (int it = 0; it < 2000; ++it) {
    int n = nd(rng);
    Rational a = testgen::rational(rng, 6, 4), b = testgen::rational(rng, 6, 4);
    if (it % 7 == 0) b = a;
    if (it % 11 == 0 && n > 1) b = -a / (n - 1);
    auto r = quadratic_analyze(a, b, n);
    Eigen::MatrixXd Q = Eigen::MatrixXd::Constant(n, n, b.get_d());
    Q.diagonal().setConstant(a.get_d());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q);
    double lo = es.eigenvalues().minCoeff();
    int rank = 0;
    for (int k = 0; k < n; ++k) rank += std::abs(es.eigenvalues()(k)) > 1e-9;
    EXPECT_EQ(r.sos, lo > -1e-9) << a << " " << b << " " << n;
    if (r.sos) {
      EXPECT_EQ(r.rank, rank);
      EXPECT_TRUE(r.rank == 0 || r.rank == 1 || r.rank == n - 1 || r.rank == n);
    }
  }
}

// ---------------------------------------------------------------- quartic

TEST(Quartic, NotSosWitness) {
  QuarticAnalysis q = quartic_analyze({1, 2, 1, 0});
  EXPECT_EQ(q.sos, SdpStatus::Infeasible);
  EXPECT_EQ(q.k2.kind, ConicKind::CrossingLines);
  ASSERT_TRUE(q.witness);
  EXPECT_EQ(*q.witness, (std::array<int, 3>{1, -2, 1}));
  EXPECT_EQ(q.witness_value, -9);
  EXPECT_EQ(eval(QuarticCoeffs{1, 2, 1, 0}.poly(), {1, -2, 1}), -9);
}

TEST(Quartic, SumOfFourthPowersPlusCross) {
  QuarticAnalysis q = quartic_analyze({1, 0, 1, 0});
  EXPECT_TRUE(q.necessary_ok());
  EXPECT_TRUE(q.infinity_point_ok);
  EXPECT_EQ(q.k1.kind, ConicKind::Parabola);
  EXPECT_EQ(q.k2.kind, ConicKind::Hyperbola);
  EXPECT_NE(q.sos, SdpStatus::Infeasible);
  EXPECT_EQ(q.psd_vertex_count(), 2);
  for (const auto& v : q.psd_vertices()) EXPECT_EQ(quartic_boundary_rank({1, 0, 1, 0}, v), 3);
}

TEST(Quartic, CoefficientRoundTrip) {
  QuarticCoeffs c{Rational(3, 2), -1, 2, Rational(1, 3)};
  QuarticCoeffs back = QuarticCoeffs::from_poly(c.poly());
  EXPECT_EQ(back.a, c.a);
  EXPECT_EQ(back.b, c.b);
  EXPECT_EQ(back.c, c.c);
  EXPECT_EQ(back.d, c.d);
  EXPECT_THROW(QuarticCoeffs::from_poly(parse_poly("x1^4", 3)), std::invalid_argument);
}

TEST(QuarticProperty, RandomSosQuarticGeometry) {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal;
  for (int it = 0; it < 40; ++it) {
    QuarticFromBlocks gen = testgen::generic_sos_quartic(rng);
    const QuarticCoeffs& c = gen.coeffs;
    QuarticAnalysis q = quartic_analyze(c);
    ASSERT_NE(q.sos, SdpStatus::Infeasible);
    EXPECT_TRUE(q.necessary_ok());
    EXPECT_TRUE(q.infinity_point_ok);
    ASSERT_EQ(q.psd_vertex_count(), 2);
    auto vs = q.psd_vertices();
    for (const auto& v : vs) EXPECT_EQ(quartic_boundary_rank(c, v), 3);
    Eigen::Vector2d mid = (vs[0] + vs[1]) / 2;
    EXPECT_EQ(quartic_boundary_rank(c, mid), 6);
    Eigen::Vector2d interior(gen.q12.get_d(), gen.q16.get_d());
    EXPECT_EQ(quartic_boundary_rank(c, interior), 6);
    for (int k = 0; k < 4; ++k) {
      Eigen::Vector2d dir(normal(rng), normal(rng));
      auto hit = quartic_ray_hit(c, interior, dir.normalized());
      ASSERT_TRUE(hit);
      if (hit->which == 1) EXPECT_EQ(quartic_boundary_rank(c, hit->point), 5);
      if (hit->which == 2) EXPECT_EQ(quartic_boundary_rank(c, hit->point), 4);
    }
    // Gram blocks at the generating point reproduce f
    auto [k1, k2] = quartic_blocks(c, gen.q12.get_d(), gen.q16.get_d());
    EXPECT_GT(min_eigenvalue(k1), 0);
    EXPECT_GT(min_eigenvalue(k2), 0);
  }
}

TEST(QuarticProperty, AnalysisAgreesWithCertify) {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 30; ++it) {
    QuarticCoeffs c{testgen::rational(rng, 5, 3), testgen::rational(rng, 5, 3),
                    testgen::rational(rng, 5, 3), testgen::rational(rng, 5, 3)};
    QuarticAnalysis q = quartic_analyze(c);
    CertifyResult r = certify_symmetric(c.poly());
    if (q.sos == SdpStatus::Infeasible) {
      EXPECT_NE(r.status, CertifyStatus::Feasible);
    } else if (q.sos != SdpStatus::Indeterminate) {
      EXPECT_NE(r.status, CertifyStatus::Infeasible);
    }
    if (!q.necessary_ok()) EXPECT_EQ(q.sos, SdpStatus::Infeasible);
    if (q.witness) {
      std::vector<Rational> x{(*q.witness)[0], (*q.witness)[1], (*q.witness)[2]};
      EXPECT_EQ(eval(c.poly(), x), q.witness_value);
      EXPECT_LT(q.witness_value, 0);
    }
  }
}

// ----------------------------------------------------------------- sextic

namespace {
const char* kExampleSextic = "1/54*x1^6 + 1/54*x2^6 + 1/54*x3^6 - 1/18*x1^2*x2^2*x3^2";

SdpProblem sextic_problem(const SexticCoeffs& c) {
  std::array<double, 6> zero{};
  SexticBlocks B0 = sextic_blocks(c, zero);
  SdpProblem pr;
  pr.num_params = 6;
  SdpBlock t, s, a;
  t.constant = B0.trivial;
  s.constant = B0.standard;
  a.constant = Eigen::MatrixXd::Constant(1, 1, B0.alternating);
  for (int k = 0; k < 6; ++k) {
    std::array<double, 6> e{};
    e[k] = 1;
    SexticBlocks Bk = sextic_blocks(c, e);
    t.coeffs.push_back(Bk.trivial - B0.trivial);
    s.coeffs.push_back(Bk.standard - B0.standard);
    a.coeffs.push_back(Eigen::MatrixXd::Constant(1, 1, Bk.alternating - B0.alternating));
  }
  pr.blocks = {t, s, a};
  pr.box = 1e3;
  return pr;
}
}  // namespace

TEST(Sextic, SquareOfPowerSum) {
  // (x1^3 + x2^3 + x3^3)^2
  SexticCoeffs c;
  for (auto& x : c.a) x = 0;
  c.a[0] = 1;
  c.a[4] = 2;
  SexticBlocks B = sextic_blocks(c, {1, 0, 0, 0, 0, 0});
  EXPECT_EQ(numerical_rank(B.trivial), 1);
  EXPECT_LE(B.standard.cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE(std::abs(B.alternating), 1e-12);
}

TEST(SexticProperty, TrivialBlockEvaluatesAtOnes) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> normal;
  const Eigen::Vector3d w(std::sqrt(3.0), std::sqrt(6.0), 1.0);
  for (int it = 0; it < 50; ++it) {
    SexticCoeffs c;
    for (auto& x : c.a) x = testgen::rational(rng);
    std::array<double, 6> q;
    for (auto& x : q) x = normal(rng);
    SexticBlocks B = sextic_blocks(c, q);
    double f111 = eval(c.poly(), {1, 1, 1}).get_d();
    EXPECT_NEAR(w.dot(B.trivial * w), f111, 1e-9 * (1 + std::abs(f111)));
    EXPECT_LE((B.trivial - B.trivial.transpose()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((B.standard - B.standard.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(SexticProperty, ParameterizationFeasibilityMatchesCertify) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 6; ++it) {
    SparsePoly f = testgen::sos_symmetric_form(rng, 3, 3, 3);
    SexticCoeffs c = SexticCoeffs::from_poly(f);
    EXPECT_NE(solve(sextic_problem(c)).status, SdpStatus::Infeasible);
    EXPECT_EQ(certify_symmetric(f).status, CertifyStatus::Feasible);
  }
  // negative at (1,1,1)
  SparsePoly g = parse_poly("x1^6 + x2^6 + x3^6 - 2*x1^2*x2^2*x3^2 - x1^3*x2^3 - x1^3*x3^3 - x2^3*x3^3", 3);
  EXPECT_LT(eval(g, {1, 1, 1}), 0);
  EXPECT_EQ(solve(sextic_problem(SexticCoeffs::from_poly(g))).status, SdpStatus::Infeasible);
  EXPECT_EQ(certify_symmetric(g).status, CertifyStatus::Infeasible);
}

TEST(Sextic, Obstructions) {
  SexticObstructions ex = sextic_rank3_obstructions(SexticCoeffs::from_poly(parse_poly(kExampleSextic, 3)));
  EXPECT_EQ(ex.case_b, 0);
  EXPECT_NE(ex.case_a, 0);
  std::mt19937_64 rng(21);
  for (int it = 0; it < 50; ++it) {
    SexticCoeffs c;
    for (auto& x : c.a) x = testgen::rational(rng, 20, 7);
    SexticObstructions o = sextic_rank3_obstructions(c);
    EXPECT_NE(o.case_a, 0);
    EXPECT_NE(o.case_b, 0);
  }
}
