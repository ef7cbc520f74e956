// Symmetry-adapted bases: block layout, invariant inner product, pivoted construction.
#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "symsos/polycore.hpp"
#include "symsos/repsn.hpp"

namespace symsos {

struct BlockEntry {
  std::string label;
  int irrep = 0;   // index into GroupRep::irreps()
  int m = 0;       // multiplicity
  int n = 0;       // irrep dimension
  int offset = 0;  // first column; copy k, vector j sits at offset + k*m + j
};

struct BlockLayout {
  int N = 0;
  std::vector<BlockEntry> entries;  // only isotypics with m > 0
  std::vector<int> multiplicities() const;
};

struct SymAdaptedBasis {
  Eigen::MatrixXd T;        // over the monomial basis
  Eigen::MatrixXd T_local;  // over the rep's (orthonormal) frame
  BlockLayout layout;
  std::vector<RealPoly> basis_polys;
  // Irrep matrices used, per layout entry, indexed by group element.
  std::vector<std::vector<Eigen::MatrixXd>> irrep_matrices;
};

// (1/|G|) sum D(g)^T D(g) in the rep's current frame.
Eigen::MatrixXd invariant_gram(const GroupRep& rep);

struct OrthogonalizedRep {
  Eigen::MatrixXd U;
  GroupRep rep;
};
// Modified Gram-Schmidt of the standard basis under <v,w> = v^T S w.
OrthogonalizedRep orthogonalize_rep(const GroupRep& rep, const Eigen::MatrixXd& S);
// invariant_gram + orthogonalize_rep, skipped when the action is already orthogonal.
GroupRep orthogonalized(const GroupRep& rep);

// Max deviation of D(g)^T D(g) from I over the group.
double orthogonality_defect(const GroupRep& rep);

// Orthogonal matrices for a character-only irrep, cut out of its isotypic
// component through a generic commutant element.
std::vector<Eigen::MatrixXd> realize_irrep(const GroupRep& rep, std::size_t irrep);

SymAdaptedBasis symmetry_adapted_basis(const GroupRep& rep);

// Largest |entry| of T^-1 D(g) T outside the pattern d^i(g) (x) I_m; T and D(g) over monomials.
double verify_block_structure(const GroupRep& rep, const Eigen::MatrixXd& T,
                              const BlockLayout& layout);
// Largest deviation of the repeated m x m sub-blocks from d^i(g)_{ab} I_m.
double copy_agreement(const GroupRep& rep, const SymAdaptedBasis& sab);

// Columns of T belonging to copy k of layout entry b.
Eigen::MatrixXd copy_columns(const Eigen::MatrixXd& T, const BlockEntry& b, int k);

}  // namespace symsos
