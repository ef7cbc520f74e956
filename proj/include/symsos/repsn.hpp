// Representations of S_n and finite matrix groups acting on polynomial bases.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symsos/polycore.hpp"
#include "symsos/symfunc.hpp"

namespace symsos {

// One-line notation on {0,...,n-1}.
using Permutation = std::vector<int>;

Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& p);
Partition cycle_type(const Permutation& p);
int sign(const Permutation& p);
// P e_j = e_{p(j)}
Eigen::MatrixXd permutation_matrix(const Permutation& p);
// All permutations of n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

struct HookData {
  Partition lambda;
  std::vector<int> hooks;
  int n_stat = 0;
};
HookData hook_data(const Partition& lambda);

// Number of standard Young tableaux of shape lambda.
std::int64_t irrep_dimension(const Partition& lambda);

// Solutions y >= 0 of sum h_i y_i = d - n(lambda).
std::int64_t multiplicity(const Partition& lambda, int d);
// <chi_lambda, chi_d> by enumeration of S_n, n <= 8.
std::int64_t multiplicity_oracle(const Partition& lambda, int d);
// Murnaghan-Nakayama.
std::int64_t character(const Partition& lambda, const Partition& cycle_type);

struct QuasiPolyValues {
  Rational Q;
  Rational P;
};
Rational quasi_poly_Q(int d);
Rational quasi_poly_P(int d);
QuasiPolyValues quasi_poly_check(int d);

struct StandardTableau {
  // row and column of the cell holding entry k (0-based entries)
  std::vector<int> row, col;
};
std::vector<StandardTableau> standard_tableaux(const Partition& lambda);

// Young's orthogonal form, given by its matrices on adjacent transpositions.
struct YoungIrrep {
  Partition lambda;
  int dim = 0;
  std::vector<Eigen::MatrixXd> generators;  // s_k swaps k and k+1
  Eigen::MatrixXd matrix(const Permutation& p) const;
};
YoungIrrep young_orthogonal_form(const Partition& lambda);

class FiniteGroup;

struct IrrepData {
  std::string label;
  int dim = 0;
  std::optional<Partition> partition;
  std::vector<double> character;          // indexed by group element
  std::vector<Eigen::MatrixXd> matrices;  // indexed by group element; empty if not supplied
  bool has_matrices() const { return !matrices.empty(); }
};

// Young orthogonal irrep over the canonical element order of S_n.
IrrepData young_orthogonal_irrep(const Partition& lambda);

class FiniteGroup {
 public:
  // S_n as permutation matrices, elements in lexicographic order.
  static FiniteGroup symmetric(int n);
  static FiniteGroup from_generators(const std::vector<Eigen::MatrixXd>& generators,
                                     double tol = 1e-9, std::size_t cap = 10000);

  int dim() const { return dim_; }
  std::size_t order() const { return elements_.size(); }
  const Eigen::MatrixXd& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Eigen::MatrixXd>& elements() const { return elements_; }
  const std::vector<Eigen::MatrixXd>& generators() const { return generators_; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  std::size_t product(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> find(const Eigen::MatrixXd& m) const;
  bool is_permutation_group() const { return !perms_.empty(); }
  const Permutation& permutation(std::size_t i) const { return perms_.at(i); }
  // Classes in order of first element; each lists element indices.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;
  const std::string& name() const { return name_; }
  void set_name(std::string s) { name_ = std::move(s); }

 private:
  void index_elements();
  std::vector<long long> key(const Eigen::MatrixXd& m) const;

  int dim_ = 0;
  double tol_ = 1e-9;
  std::string name_;
  std::vector<Eigen::MatrixXd> elements_;
  std::vector<Eigen::MatrixXd> generators_;
  std::vector<Permutation> perms_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::map<std::vector<long long>, std::vector<std::size_t>> lookup_;
};

std::vector<Eigen::MatrixXd> group_closure(const std::vector<Eigen::MatrixXd>& generators,
                                           double tol = 1e-9, std::size_t cap = 10000);

// Column j holds the coefficients of basis_j(g x) in the basis. Note that
// g -> induced_action(g) reverses products.
Eigen::MatrixXd induced_action(const Eigen::MatrixXd& g, const std::vector<Exponent>& basis);

// Frobenius-Schur indicator (1/|G|) sum chi(g^2), rounded.
int frobenius_schur(const std::vector<double>& chi, const FiniteGroup& group);

// S_n orbits of degree-d monomials, orbits in reverse-lex partition order,
// grlex within each orbit.
std::vector<Exponent> orbit_ordered_monomials(int n, int d);
std::vector<std::vector<int>> monomial_orbits(int n, int d);

enum class BasisOrder { Grlex, Orbit };

// A finite group acting on degree-d forms, D(g) a homomorphism. The action is
// stored in a frame: columns of frame() give the current basis over monomials.
class GroupRep {
 public:
  static GroupRep symmetric(int n, int d, BasisOrder order = BasisOrder::Orbit);
  static GroupRep from_group(std::shared_ptr<const FiniteGroup> group, int d,
                             std::vector<IrrepData> irreps,
                             BasisOrder order = BasisOrder::Grlex);

  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  int num_vars() const { return group_->dim(); }
  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Exponent>& basis() const { return basis_; }
  const Eigen::MatrixXd& action(std::size_t g) const { return action_[g]; }
  const Eigen::MatrixXd& monomial_action(std::size_t g) const { return mono_action_[g]; }
  const Eigen::MatrixXd& frame() const { return frame_; }
  const std::vector<IrrepData>& irreps() const { return irreps_; }
  const std::vector<int>& multiplicities() const { return mult_; }
  bool is_permutation_action() const { return perm_action_; }
  bool is_symmetric_group() const { return symmetric_; }

  // Same group and irreps, action expressed in frame U (D' = U^-1 D U).
  GroupRep with_frame(const Eigen::MatrixXd& U) const;
  // Replace irrep matrices (used after realizing character-only irreps).
  void set_irrep_matrices(std::size_t i, std::vector<Eigen::MatrixXd> mats);

 private:
  GroupRep() = default;
  void build_action(int d, BasisOrder order);
  void compute_multiplicities();

  std::shared_ptr<const FiniteGroup> group_;
  int degree_ = 0;
  bool perm_action_ = false;
  bool symmetric_ = false;
  std::vector<Exponent> basis_;
  std::vector<Eigen::MatrixXd> mono_action_;
  std::vector<Eigen::MatrixXd> action_;
  Eigen::MatrixXd frame_;
  std::vector<IrrepData> irreps_;
  std::vector<int> mult_;
};

// Matrix group JSON: {"name", "dim", "generators": [[[...]]],
// "classes": [{"name", "representative"}], "irreps": [{"label", "dim", "character": [...]}]}.
// Entries are numbers or strings (rationals or decimals).
struct MatrixGroupData {
  std::shared_ptr<FiniteGroup> group;
  std::vector<IrrepData> irreps;
};
MatrixGroupData load_matrix_group(const std::string& path);
MatrixGroupData parse_matrix_group(const std::string& json_text);

}  // namespace symsos
