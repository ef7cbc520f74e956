#include <gtest/gtest.h>

#include <random>

#include "symsos/sdpcore.hpp"

using namespace symsos;

namespace {
SdpBlock block2(double c00, double c01, double c11) {
  SdpBlock b;
  b.constant.resize(2, 2);
  b.constant << c00, c01, c01, c11;
  return b;
}
}  // namespace

TEST(Sdpcore, MinimizeDiagonalShift) {
  // min t s.t. [[t,1],[1,t]] >= 0
  SdpProblem pr;
  pr.num_params = 1;
  SdpBlock b = block2(0, 1, 0);
  b.coeffs.push_back(Eigen::MatrixXd::Identity(2, 2));
  pr.blocks.push_back(b);
  pr.objective = Eigen::VectorXd::Ones(1);
  pr.box = 100;
  SdpSolution s = solve(pr);
  ASSERT_TRUE(s.status == SdpStatus::Optimal || s.status == SdpStatus::Feasible);
  EXPECT_NEAR(s.params(0), 1.0, 1e-6);
  EXPECT_GE(s.min_eig_per_block[0], -1e-8);
}

TEST(Sdpcore, DetectsInfeasible) {
  // [[-1, p], [p, 1]] is never PSD
  SdpProblem pr;
  pr.num_params = 1;
  SdpBlock b = block2(-1, 0, 1);
  Eigen::MatrixXd A(2, 2);
  A << 0, 1, 1, 0;
  b.coeffs.push_back(A);
  pr.blocks.push_back(b);
  SdpSolution s = solve(pr);
  EXPECT_EQ(s.status, SdpStatus::Infeasible);
  EXPECT_LT(s.phase1_value, 0);
}

TEST(Sdpcore, NoParameters) {
  SdpProblem pr;
  pr.blocks.push_back(block2(2, 1, 2));
  EXPECT_NE(solve(pr).status, SdpStatus::Infeasible);
  pr.objective = Eigen::VectorXd(0);
  EXPECT_EQ(solve(pr).status, SdpStatus::Optimal);
  SdpProblem bad;
  bad.blocks.push_back(block2(1, 2, 1));
  EXPECT_EQ(solve(bad).status, SdpStatus::Infeasible);
  bad.objective = Eigen::VectorXd(0);
  EXPECT_EQ(solve(bad).status, SdpStatus::Infeasible);
}

TEST(Sdpcore, ValidateRejectsMalformedProblems) {
  SdpProblem pr;
  pr.num_params = 1;
  pr.blocks.push_back(block2(1, 0, 1));  // missing coefficient matrix
  EXPECT_THROW(pr.validate(64, 100), std::invalid_argument);
  SdpProblem asym;
  SdpBlock b;
  b.constant.resize(2, 2);
  b.constant << 1, 2, 3, 1;
  asym.blocks.push_back(b);
  EXPECT_THROW(asym.validate(64, 100), std::invalid_argument);
}

TEST(Sdpcore, FeasibleBoundaryPoint) {
  // [[1, p], [p, 1]] and [[1, -p],[-p, 1]] both PSD, minimize -p: p = 1
  SdpProblem pr;
  pr.num_params = 1;
  SdpBlock a = block2(1, 0, 1), b = block2(1, 0, 1);
  Eigen::MatrixXd A(2, 2);
  A << 0, 1, 1, 0;
  a.coeffs.push_back(A);
  b.coeffs.push_back(A);
  pr.blocks = {a, b};
  pr.objective = -Eigen::VectorXd::Ones(1);
  SdpSolution s = solve(pr);
  ASSERT_NE(s.status, SdpStatus::Infeasible);
  EXPECT_NEAR(s.params(0), 1.0, 1e-6);
}

TEST(SdpcoreProperty, RankAndFactor) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  for (int it = 0; it < 30; ++it) {
    int n = 2 + it % 6, r = it % (n + 1);
    Eigen::MatrixXd W(n, r);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < r; ++j) W(i, j) = normal(rng);
    Eigen::MatrixXd M = W * W.transpose();
    EXPECT_EQ(numerical_rank(M), r);
    auto f = psd_factor(M);
    EXPECT_EQ(static_cast<int>(f.size()), r);
    Eigen::MatrixXd back = Eigen::MatrixXd::Zero(n, n);
    for (const auto& w : f) back += w * w.transpose();
    EXPECT_LE((back - M).cwiseAbs().maxCoeff(), 1e-9 * (1 + M.cwiseAbs().maxCoeff()));
    EXPECT_GE(min_eigenvalue(M), -1e-9 * (1 + M.norm()));
  }
}

TEST(SdpcoreProperty, RandomFeasibleProblemsAreSolved) {
  // Problems built around a known strictly feasible point
  std::mt19937_64 rng(6);
  std::normal_distribution<double> normal;
  for (int it = 0; it < 20; ++it) {
    int k = 1 + it % 4, n = 2 + it % 3;
    Eigen::VectorXd p0(k);
    for (int j = 0; j < k; ++j) p0(j) = normal(rng);
    SdpProblem pr;
    pr.num_params = k;
    SdpBlock b;
    Eigen::MatrixXd F0 = Eigen::MatrixXd::Identity(n, n) * 0.5;
    b.constant = F0;
    for (int j = 0; j < k; ++j) {
      Eigen::MatrixXd A(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) A(r, c) = normal(rng);
      A = (A + A.transpose()).eval();
      b.coeffs.push_back(A);
      b.constant -= p0(j) * A;
    }
    pr.blocks.push_back(b);
    pr.box = 50;
    SdpSolution s = solve(pr);
    ASSERT_NE(s.status, SdpStatus::Infeasible);
    EXPECT_GE(min_eigenvalue(pr.block_value(0, s.params)), -1e-7);
  }
}
