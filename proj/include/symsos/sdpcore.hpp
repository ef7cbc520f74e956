// Small dense semidefinite feasibility and optimization over affine block families.
#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace symsos {

// F(p) = constant + sum_k p_k coeffs[k]
struct SdpBlock {
  Eigen::MatrixXd constant;
  std::vector<Eigen::MatrixXd> coeffs;
};

struct SdpProblem {
  int num_params = 0;
  std::vector<SdpBlock> blocks;
  std::optional<Eigen::VectorXd> objective;  // minimize objective . p
  std::optional<double> box;                 // |p_k| <= box

  Eigen::MatrixXd block_value(std::size_t i, const Eigen::VectorXd& p) const;
  void validate(int max_block, int max_params) const;
};

struct SdpOptions {
  double feas_tol = 1e-8;
  double infeas_margin = 1e-7;
  int max_iters = 2000;  // total Newton steps
  int max_block = 64;
  int max_params = 4096;
};

enum class SdpStatus { Optimal, Feasible, Infeasible, Indeterminate };
const char* to_string(SdpStatus s);

struct SdpSolution {
  Eigen::VectorXd params;
  std::vector<double> min_eig_per_block;
  SdpStatus status = SdpStatus::Indeterminate;
  int iterations = 0;
  // max over p of min_i lambda_min(F_i(p)), as found by phase 1
  double phase1_value = 0;
  Eigen::VectorXd phase1_params;
  std::string message;
};

SdpSolution solve(const SdpProblem& problem, const SdpOptions& opts = {});

double min_eigenvalue(const Eigen::MatrixXd& M);
// Singular values above rel_tol * sigma_max.
int numerical_rank(const Eigen::MatrixXd& M, double rel_tol = 1e-7);
// M ~ sum w w^T over the numerically nonzero eigenvalues.
std::vector<Eigen::VectorXd> psd_factor(const Eigen::MatrixXd& M, double tol = 1e-8,
                                        double rank_tol = 1e-7);

}  // namespace symsos
