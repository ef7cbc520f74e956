#include "symsos/symadapt.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace symsos {

namespace {
constexpr double kRankRel = 1e-8;
}

std::vector<int> BlockLayout::multiplicities() const {
  std::vector<int> m;
  for (const auto& e : entries) m.push_back(e.m);
  return m;
}

Eigen::MatrixXd invariant_gram(const GroupRep& rep) {
  int N = rep.dim();
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(N, N);
  for (std::size_t g = 0; g < rep.group().order(); ++g) {
    const auto& D = rep.action(g);
    S += D.transpose() * D;
  }
  S /= static_cast<double>(rep.group().order());
  return 0.5 * (S + S.transpose());
}

OrthogonalizedRep orthogonalize_rep(const GroupRep& rep, const Eigen::MatrixXd& S) {
  int N = rep.dim();
  if (S.rows() != N || S.cols() != N) throw std::invalid_argument("Gram matrix has wrong size");
  Eigen::MatrixXd U = Eigen::MatrixXd::Identity(N, N);
  double scale = S.cwiseAbs().maxCoeff();
  for (int j = 0; j < N; ++j) {
    Eigen::VectorXd v = U.col(j);
    for (int k = 0; k < j; ++k) v -= (U.col(k).dot(S * v)) * U.col(k);
    double nrm2 = v.dot(S * v);
    if (!(nrm2 > 1e-12 * scale)) throw std::runtime_error("invariant Gram matrix is singular");
    U.col(j) = v / std::sqrt(nrm2);
  }
  Eigen::MatrixXd Uinv = U.transpose() * S;
  double defect = (Uinv * U - Eigen::MatrixXd::Identity(N, N)).cwiseAbs().maxCoeff();
  if (defect > 1e-8) throw std::runtime_error("Gram-Schmidt lost orthogonality");
  return {U, rep.with_frame(U)};
}

double orthogonality_defect(const GroupRep& rep) {
  double worst = 0;
  int N = rep.dim();
  for (std::size_t g = 0; g < rep.group().order(); ++g) {
    const auto& D = rep.action(g);
    worst = std::max(worst,
                     (D.transpose() * D - Eigen::MatrixXd::Identity(N, N)).cwiseAbs().maxCoeff());
  }
  return worst;
}

GroupRep orthogonalized(const GroupRep& rep) {
  if (orthogonality_defect(rep) <= 1e-12) return rep;
  return orthogonalize_rep(rep, invariant_gram(rep)).rep;
}

namespace {

Eigen::MatrixXd orthonormal_range(const Eigen::MatrixXd& P, int expected_rank) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(P, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  double smax = s.size() ? s(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > kRankRel * smax) ++rank;
  if (rank != expected_rank)
    throw std::runtime_error("isotypic projector has rank " + std::to_string(rank) +
                             ", expected " + std::to_string(expected_rank));
  return svd.matrixU().leftCols(rank);
}

}  // namespace

std::vector<Eigen::MatrixXd> realize_irrep(const GroupRep& rep, std::size_t irrep) {
  const auto& irr = rep.irreps().at(irrep);
  int mi = rep.multiplicities().at(irrep);
  int ni = irr.dim;
  if (mi == 0) throw std::invalid_argument("cannot realize irrep '" + irr.label + "' (absent)");
  if (orthogonality_defect(rep) > 1e-8) throw std::invalid_argument("rep is not orthogonal");
  const auto& G = rep.group();
  int N = rep.dim();
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(N, N);
  for (std::size_t g = 0; g < G.order(); ++g) P += irr.character[G.inverse(g)] * rep.action(g);
  P *= static_cast<double>(ni) / G.order();
  Eigen::MatrixXd W = orthonormal_range(P, mi * ni);

  std::mt19937_64 rng(0x5eedULL + irrep);
  std::normal_distribution<double> normal;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::MatrixXd B;
    if (mi == 1) {
      B = W;
    } else {
      Eigen::MatrixXd R(N, N);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j <= i; ++j) R(i, j) = R(j, i) = normal(rng);
      Eigen::MatrixXd H = Eigen::MatrixXd::Zero(N, N);
      for (std::size_t g = 0; g < G.order(); ++g)
        H += rep.action(g).transpose() * R * rep.action(g);
      Eigen::MatrixXd HW = W.transpose() * H * W;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (HW + HW.transpose()));
      const auto& ev = es.eigenvalues();
      double spread = std::max(1.0, ev.cwiseAbs().maxCoeff());
      if (ev(ni) - ev(ni - 1) < 1e-6 * spread) continue;
      if (ev(ni - 1) - ev(0) > 1e-7 * spread) continue;
      B = W * es.eigenvectors().leftCols(ni);
    }
    std::vector<Eigen::MatrixXd> mats;
    double err = 0;
    for (std::size_t g = 0; g < G.order(); ++g) {
      Eigen::MatrixXd d = B.transpose() * rep.action(g) * B;
      err = std::max(err, (rep.action(g) * B - B * d).cwiseAbs().maxCoeff());
      mats.push_back(std::move(d));
    }
    if (err < 1e-8) return mats;
  }
  throw std::runtime_error("failed to realize irrep '" + irr.label + "' from its character");
}

Eigen::MatrixXd copy_columns(const Eigen::MatrixXd& T, const BlockEntry& b, int k) {
  return T.middleCols(b.offset + k * b.m, b.m);
}

SymAdaptedBasis symmetry_adapted_basis(const GroupRep& rep) {
  if (orthogonality_defect(rep) > 1e-8)
    throw std::invalid_argument("symmetry_adapted_basis needs an orthogonalized rep");
  const auto& G = rep.group();
  int N = rep.dim();
  double order = static_cast<double>(G.order());
  SymAdaptedBasis sab;
  sab.layout.N = N;
  sab.T_local = Eigen::MatrixXd::Zero(N, N);
  int offset = 0;
  for (std::size_t i = 0; i < rep.irreps().size(); ++i) {
    int mi = rep.multiplicities()[i];
    if (mi == 0) continue;
    const auto& irr = rep.irreps()[i];
    int ni = irr.dim;
    std::vector<Eigen::MatrixXd> d = irr.has_matrices() ? irr.matrices : realize_irrep(rep, i);

    Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(N, N);
    for (std::size_t g = 0; g < G.order(); ++g) pi += d[G.inverse(g)](0, 0) * rep.action(g);
    orthonormal_range(pi, mi);  // rank check

    // greedy pivoted Gram-Schmidt on the columns of pi
    Eigen::MatrixXd R = pi;
    double max0 = R.colwise().norm().maxCoeff();
    std::vector<Eigen::VectorXd> v1;
    for (int t = 0; t < mi; ++t) {
      Eigen::Index best = 0;
      double bn = R.col(0).norm();
      for (Eigen::Index c = 1; c < R.cols(); ++c) {
        double cn = R.col(c).norm();
        if (cn > bn * (1 + 1e-12)) {
          bn = cn;
          best = c;
        }
      }
      if (bn <= kRankRel * max0) throw std::runtime_error("Gram-Schmidt breakdown");
      Eigen::VectorXd q = R.col(best) / bn;
      for (const auto& p : v1) q -= p.dot(q) * p;
      q.normalize();
      R -= q * (q.transpose() * R);
      v1.push_back(q);
    }

    BlockEntry entry{irr.label, static_cast<int>(i), mi, ni, offset};
    for (int k = 0; k < ni; ++k) {
      Eigen::MatrixXd Pk = Eigen::MatrixXd::Zero(N, N);
      for (std::size_t g = 0; g < G.order(); ++g) Pk += d[G.inverse(g)](0, k) * rep.action(g);
      Pk *= ni / order;
      for (int j = 0; j < mi; ++j) {
        Eigen::VectorXd v = k == 0 ? v1[j] : Eigen::VectorXd(Pk * v1[j]);
        if (std::abs(v.norm() - 1.0) > 1e-8)
          throw std::runtime_error("transfer operator did not preserve norm; irrep data inconsistent");
        sab.T_local.col(offset + k * mi + j) = v;
      }
    }
    sab.layout.entries.push_back(entry);
    sab.irrep_matrices.push_back(std::move(d));
    offset += mi * ni;
  }
  if (offset != N) throw std::runtime_error("isotypic dimensions do not add up to N");
  sab.T = rep.frame() * sab.T_local;
  for (int c = 0; c < N; ++c) {
    RealPoly p(rep.num_vars());
    for (int r = 0; r < N; ++r)
      if (sab.T(r, c) != 0.0) p.add_term(rep.basis()[r], sab.T(r, c));
    sab.basis_polys.push_back(std::move(p));
  }
  return sab;
}

namespace {

// -1 when column c is not in any block
void locate(const BlockLayout& layout, int c, int& block, int& copy, int& j) {
  block = -1;
  for (std::size_t b = 0; b < layout.entries.size(); ++b) {
    const auto& e = layout.entries[b];
    if (c >= e.offset && c < e.offset + e.m * e.n) {
      block = static_cast<int>(b);
      copy = (c - e.offset) / e.m;
      j = (c - e.offset) % e.m;
      return;
    }
  }
}

}  // namespace

double verify_block_structure(const GroupRep& rep, const Eigen::MatrixXd& T,
                              const BlockLayout& layout) {
  int N = rep.dim();
  if (T.rows() != N || T.cols() != N) throw std::invalid_argument("T has wrong size");
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(T);
  std::vector<int> blk(N), cp(N), jj(N);
  for (int c = 0; c < N; ++c) locate(layout, c, blk[c], cp[c], jj[c]);
  double worst = 0;
  for (std::size_t g = 0; g < rep.group().order(); ++g) {
    Eigen::MatrixXd A = lu.solve(rep.monomial_action(g) * T);
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) {
        bool allowed = blk[r] >= 0 && blk[r] == blk[c] && jj[r] == jj[c];
        if (!allowed) worst = std::max(worst, std::abs(A(r, c)));
      }
  }
  return worst;
}

double copy_agreement(const GroupRep& rep, const SymAdaptedBasis& sab) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(sab.T);
  double worst = 0;
  for (std::size_t g = 0; g < rep.group().order(); ++g) {
    Eigen::MatrixXd A = lu.solve(rep.monomial_action(g) * sab.T);
    for (std::size_t b = 0; b < sab.layout.entries.size(); ++b) {
      const auto& e = sab.layout.entries[b];
      const auto& d = sab.irrep_matrices[b][g];
      for (int a = 0; a < e.n; ++a)
        for (int c = 0; c < e.n; ++c) {
          Eigen::MatrixXd sub = A.block(e.offset + a * e.m, e.offset + c * e.m, e.m, e.m);
          Eigen::MatrixXd expect = d(a, c) * Eigen::MatrixXd::Identity(e.m, e.m);
          worst = std::max(worst, (sub - expect).cwiseAbs().maxCoeff());
        }
    }
  }
  return worst;
}

}  // namespace symsos
