// Symmetry-adapted Gram spectrahedra and their structural formulas.
#pragma once

#include <Eigen/Dense>
#include <set>
#include <string>
#include <vector>

#include "symsos/polycore.hpp"
#include "symsos/repsn.hpp"
#include "symsos/symadapt.hpp"

namespace symsos {

struct AffineBlock {
  std::string label;
  int irrep_dim = 1;
  Eigen::MatrixXd constant;
  std::vector<Eigen::MatrixXd> coeffs;
  Eigen::MatrixXd at(const Eigen::VectorXd& p) const;
};

struct BlockSpectrahedron {
  int n = 0;
  int half_degree = 0;
  std::vector<Exponent> basis;
  Eigen::MatrixXd T;  // over the monomial basis
  BlockLayout layout;
  RealPoly target;
  bool exact = false;  // affine solve done over the rationals
  std::vector<std::string> free_params;
  std::vector<AffineBlock> blocks;  // one per layout entry
  // Monomial-basis Gram matrix as an affine function of the parameters.
  Eigen::MatrixXd gram_constant;
  std::vector<Eigen::MatrixXd> gram_coeffs;
  // Exact monomial-basis Gram data (exact route only).
  RationalMatrix exact_gram_constant;
  std::vector<RationalMatrix> exact_gram_coeffs;

  int num_params() const { return static_cast<int>(free_params.size()); }
  Eigen::MatrixXd gram(const Eigen::VectorXd& p) const;
  std::vector<Eigen::MatrixXd> block_values(const Eigen::VectorXd& p) const;
  // T diag(Q_i (x) I_{n_i}) T^T
  Eigen::MatrixXd assemble(const std::vector<Eigen::MatrixXd>& blocks) const;
  // Max coefficient error of m^T Q m - f with Q assembled from blocks.
  double constraint_residual(const std::vector<Eigen::MatrixXd>& blocks) const;
};

// m(x)^T Q m(x)
RealPoly gram_polynomial(const Eigen::MatrixXd& Q, const std::vector<Exponent>& basis);
SparsePoly gram_polynomial(const RationalMatrix& Q, const std::vector<Exponent>& basis);

// Max coefficient change of f under the group generators.
double invariance_defect(const SparsePoly& f, const FiniteGroup& group);
double invariance_defect(const RealPoly& f, const FiniteGroup& group);

BlockSpectrahedron build_spectrahedron(const SparsePoly& f, const GroupRep& rep,
                                       const SymAdaptedBasis& sab);

// (1/|G|) sum D(g)^T Q D(g)
Eigen::MatrixXd reynolds(const Eigen::MatrixXd& Q, const GroupRep& rep);

int cone_dimension(const std::vector<int>& multiplicities);

// Trivial block from orbit row and column sums; orbits index rows of Q.
Eigen::MatrixXd trivial_block(const Eigen::MatrixXd& Q, const std::vector<std::vector<int>>& orbits,
                              double tol = 1e-9);

std::set<int> extremal_ray_ranks(const BlockLayout& layout);
bool is_extremal(const std::vector<Eigen::MatrixXd>& blocks, double rel_tol = 1e-7);

}  // namespace symsos
