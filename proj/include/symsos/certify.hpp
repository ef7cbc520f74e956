// End-to-end SOS certification with squares grouped by isotypic component.
#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symsos/gramspec.hpp"
#include "symsos/polycore.hpp"
#include "symsos/repsn.hpp"
#include "symsos/sdpcore.hpp"
#include "symsos/symadapt.hpp"

namespace symsos {

struct GroupDescriptor {
  std::string kind;  // "symmetric" or "matrix"
  std::string name;
  int n = 0;
  std::vector<Eigen::MatrixXd> generators;
};
GroupDescriptor describe_group(const GroupRep& rep);

struct CertBlock {
  std::string label;
  int m = 0;
  int n = 0;
  Eigen::MatrixXd Q;
  int rank = 0;
};

struct CertSquare {
  std::string label;
  int block = 0;
  int copy = 0;
  RealPoly poly;
};

struct SosCertificate {
  SparsePoly f;
  int n = 0;
  int degree = 0;  // of f
  GroupDescriptor group;
  std::vector<Exponent> basis;
  Eigen::MatrixXd T;
  BlockLayout layout;
  std::vector<CertBlock> blocks;
  std::vector<CertSquare> squares;
  std::vector<RealPoly> partial_sums;  // per block
  double residual = 0;
  Eigen::VectorXd params;
};

struct RankProfile {
  int total = 0;
  std::vector<int> blocks;
};
RankProfile rank_profile(const SosCertificate& cert);

enum class CertifyStatus { Feasible, Infeasible, Indeterminate };
const char* to_string(CertifyStatus s);

struct CertifyOptions {
  SdpOptions sdp;
  double rank_tol = 1e-7;
  // Extra random objectives; the lowest-rank certificate wins.
  int vertex_search = 0;
  unsigned long long seed = 0;
  // Minimize the trace when true, else only find a feasible point.
  bool trace_objective = true;
};

struct CertifyResult {
  CertifyStatus status = CertifyStatus::Indeterminate;
  std::optional<SosCertificate> certificate;
  SdpSolution sdp;
  std::string message;
};

// rep may be unorthogonalized; certify orthogonalizes it.
CertifyResult certify(const SparsePoly& f, const GroupRep& rep, const CertifyOptions& opts = {});
// S_n acting on the n variables of f.
CertifyResult certify_symmetric(const SparsePoly& f, const CertifyOptions& opts = {});

// Pieces shared with the survey.
struct CertifyContext {
  GroupRep rep;
  SymAdaptedBasis sab;
  BlockSpectrahedron spec;
};
CertifyContext prepare(const SparsePoly& f, const GroupRep& rep);
SdpProblem make_sdp(const BlockSpectrahedron& bs);
Eigen::VectorXd trace_objective(const BlockSpectrahedron& bs);
// c_k = sum_i n_i <C_i, A_ik>
Eigen::VectorXd block_objective(const BlockSpectrahedron& bs, const std::vector<Eigen::MatrixXd>& C);
// Ranks with one threshold relative to the largest singular value over all blocks.
std::vector<int> block_ranks(const std::vector<Eigen::MatrixXd>& blocks, double rel_tol = 1e-7);
SosCertificate extract_certificate(const SparsePoly& f, const CertifyContext& ctx,
                                   const Eigen::VectorXd& params, double rank_tol = 1e-7);

struct VerifyReport {
  double residual = 0;
  double invariance_defect = 0;
  double min_block_eig = 0;
  bool square_count_ok = true;
  bool ok(double tol = 1e-7) const {
    return residual <= tol && invariance_defect <= tol && square_count_ok;
  }
};
VerifyReport verify(const SparsePoly& f, const SosCertificate& cert);

std::string certificate_to_json(const SosCertificate& cert, int indent = 2);
SosCertificate certificate_from_json(const std::string& text);

}  // namespace symsos
