#include "symsos/sdpcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace symsos {

Eigen::MatrixXd SdpProblem::block_value(std::size_t i, const Eigen::VectorXd& p) const {
  const auto& b = blocks.at(i);
  Eigen::MatrixXd M = b.constant;
  for (int k = 0; k < num_params; ++k)
    if (p(k) != 0.0) M += p(k) * b.coeffs[k];
  return M;
}

void SdpProblem::validate(int max_block, int max_params) const {
  if (num_params < 0 || num_params > max_params)
    throw std::invalid_argument("SDP has too many parameters");
  for (const auto& b : blocks) {
    if (b.constant.rows() != b.constant.cols()) throw std::invalid_argument("SDP block not square");
    if (b.constant.rows() > max_block) throw std::invalid_argument("SDP block exceeds size cap");
    double scale = 1.0 + b.constant.cwiseAbs().maxCoeff();
    if ((b.constant - b.constant.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
      throw std::invalid_argument("SDP block not symmetric");
    if (static_cast<int>(b.coeffs.size()) != num_params)
      throw std::invalid_argument("SDP block has wrong number of coefficient matrices");
    for (const auto& A : b.coeffs)
      if (A.rows() != b.constant.rows() || A.cols() != b.constant.cols())
        throw std::invalid_argument("SDP coefficient matrix has wrong size");
  }
  if (objective && objective->size() != num_params)
    throw std::invalid_argument("SDP objective has wrong length");
}

const char* to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::Optimal: return "Optimal";
    case SdpStatus::Feasible: return "Feasible";
    case SdpStatus::Infeasible: return "Infeasible";
    case SdpStatus::Indeterminate: return "Indeterminate";
  }
  return "?";
}

double min_eigenvalue(const Eigen::MatrixXd& M) {
  if (M.rows() == 0) return std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (M + M.transpose()),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

int numerical_rank(const Eigen::MatrixXd& M, double rel_tol) {
  if (M.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& s = svd.singularValues();
  double smax = s(0);
  if (smax == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * smax) ++r;
  return r;
}

std::vector<Eigen::VectorXd> psd_factor(const Eigen::MatrixXd& M, double tol, double rank_tol) {
  std::vector<Eigen::VectorXd> out;
  if (M.size() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (M + M.transpose()));
  const auto& ev = es.eigenvalues();
  if (ev(0) < -tol)
    throw std::domain_error("psd_factor: matrix has eigenvalue " + std::to_string(ev(0)));
  double emax = ev(ev.size() - 1);
  if (emax <= 0) return out;
  for (Eigen::Index i = ev.size() - 1; i >= 0; --i) {
    if (ev(i) <= rank_tol * emax) break;
    Eigen::VectorXd w = std::sqrt(ev(i)) * es.eigenvectors().col(i);
    Eigen::Index big;
    w.cwiseAbs().maxCoeff(&big);
    if (w(big) < 0) w = -w;
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

// minimize tau * c.x - sum_i log det G_i(x),  G_i(x) = C_i + sum_k x_k A_ik
struct Barrier {
  std::vector<Eigen::MatrixXd> C;
  std::vector<std::vector<Eigen::MatrixXd>> A;
  Eigen::VectorXd c;
  int k = 0;

  int nu() const {
    int s = 0;
    for (const auto& m : C) s += static_cast<int>(m.rows());
    return s;
  }

  Eigen::MatrixXd G(std::size_t i, const Eigen::VectorXd& x) const {
    Eigen::MatrixXd M = C[i];
    for (int j = 0; j < k; ++j)
      if (x(j) != 0.0) M += x(j) * A[i][j];
    return M;
  }

  // false when some G_i is not positive definite
  bool value(const Eigen::VectorXd& x, double tau, double& phi) const {
    phi = tau * c.dot(x);
    for (std::size_t i = 0; i < C.size(); ++i) {
      Eigen::LLT<Eigen::MatrixXd> llt(G(i, x));
      if (llt.info() != Eigen::Success) return false;
      const auto& L = llt.matrixL();
      double ld = 0;
      for (Eigen::Index r = 0; r < C[i].rows(); ++r) {
        double d = L(r, r);
        if (!(d > 0)) return false;
        ld += std::log(d);
      }
      phi -= 2 * ld;
    }
    return std::isfinite(phi);
  }

  void derivatives(const Eigen::VectorXd& x, double tau, Eigen::VectorXd& g,
                   Eigen::MatrixXd& H) const {
    g = tau * c;
    H = Eigen::MatrixXd::Zero(k, k);
    for (std::size_t i = 0; i < C.size(); ++i) {
      Eigen::Index m = C[i].rows();
      Eigen::LLT<Eigen::MatrixXd> llt(G(i, x));
      Eigen::MatrixXd Ginv = llt.solve(Eigen::MatrixXd::Identity(m, m));
      // column j of W holds vec(Ginv A_j), of WT holds vec((Ginv A_j)^T)
      Eigen::MatrixXd W(m * m, k), WT(m * m, k);
      for (int j = 0; j < k; ++j) {
        Eigen::MatrixXd P = Ginv * A[i][j];
        g(j) -= P.trace();
        W.col(j) = Eigen::Map<Eigen::VectorXd>(P.data(), m * m);
        Eigen::MatrixXd Pt = P.transpose();
        WT.col(j) = Eigen::Map<Eigen::VectorXd>(Pt.data(), m * m);
      }
      H.noalias() += W.transpose() * WT;
    }
    H = 0.5 * (H + H.transpose());
  }
};

struct CenterResult {
  bool ok = true;
  int steps = 0;
};

CenterResult center(const Barrier& B, Eigen::VectorXd& x, double tau, int budget) {
  CenterResult res;
  double phi;
  if (!B.value(x, tau, phi)) {
    res.ok = false;
    return res;
  }
  for (int it = 0; it < 100 && res.steps < budget; ++it) {
    Eigen::VectorXd g;
    Eigen::MatrixXd H;
    B.derivatives(x, tau, g, H);
    ++res.steps;
    double hscale = std::max(1e-300, H.diagonal().cwiseAbs().maxCoeff());
    Eigen::LDLT<Eigen::MatrixXd> ldlt(H);
    Eigen::VectorXd dx = -ldlt.solve(g);
    if (ldlt.info() != Eigen::Success || !dx.allFinite() || g.dot(dx) > 0) {
      Eigen::MatrixXd Hr = H + 1e-12 * hscale * Eigen::MatrixXd::Identity(B.k, B.k);
      dx = -Hr.ldlt().solve(g);
    }
    double lambda2 = -g.dot(dx);
    if (!std::isfinite(lambda2)) {
      res.ok = false;
      return res;
    }
    if (lambda2 < 1e-12) break;
    double s = 1.0;
    double phin = 0;
    bool accepted = false;
    for (int ls = 0; ls < 80; ++ls) {
      Eigen::VectorXd xn = x + s * dx;
      if (B.value(xn, tau, phin) && phin <= phi - 0.25 * s * lambda2) {
        x = xn;
        phi = phin;
        accepted = true;
        break;
      }
      s *= 0.5;
    }
    if (!accepted || s < 1e-6) break;  // stalled at machine precision
    if (lambda2 < 1e-9 && s == 1.0) break;
  }
  return res;
}

void add_box(Barrier& B, double box, int nparams) {
  // box rows: box - x_j >= 0 and box + x_j >= 0, diagonal blocks
  Eigen::MatrixXd C = Eigen::MatrixXd::Constant(1, 1, box);
  for (int j = 0; j < nparams; ++j) {
    for (int sgn : {-1, 1}) {
      std::vector<Eigen::MatrixXd> A(B.k, Eigen::MatrixXd::Zero(1, 1));
      A[j](0, 0) = sgn;
      B.C.push_back(C);
      B.A.push_back(std::move(A));
    }
  }
}

}  // namespace

SdpSolution solve(const SdpProblem& problem, const SdpOptions& opts) {
  problem.validate(opts.max_block, opts.max_params);
  const int k = problem.num_params;
  SdpSolution sol;
  sol.params = Eigen::VectorXd::Zero(k);

  auto evaluate = [&](const Eigen::VectorXd& p) {
    sol.min_eig_per_block.clear();
    for (std::size_t i = 0; i < problem.blocks.size(); ++i)
      sol.min_eig_per_block.push_back(min_eigenvalue(problem.block_value(i, p)));
  };
  auto min_all = [&](const Eigen::VectorXd& p) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < problem.blocks.size(); ++i)
      m = std::min(m, min_eigenvalue(problem.block_value(i, p)));
    return m;
  };

  if (problem.blocks.empty()) {
    sol.status = problem.objective ? SdpStatus::Optimal : SdpStatus::Feasible;
    sol.phase1_value = std::numeric_limits<double>::infinity();
    sol.phase1_params = sol.params;
    return sol;
  }

  double scale = 0;
  for (const auto& b : problem.blocks) scale = std::max(scale, b.constant.cwiseAbs().maxCoeff());
  if (scale == 0) {
    for (const auto& b : problem.blocks)
      for (const auto& A : b.coeffs) scale = std::max(scale, A.cwiseAbs().maxCoeff());
  }
  if (scale == 0) scale = 1;

  if (k == 0) {
    // nothing to optimize; the fixed point decides
    evaluate(sol.params);
    double worst = *std::min_element(sol.min_eig_per_block.begin(), sol.min_eig_per_block.end());
    sol.phase1_value = worst;
    sol.phase1_params = sol.params;
    if (worst >= -opts.feas_tol * scale)
      sol.status = problem.objective ? SdpStatus::Optimal : SdpStatus::Feasible;
    else if (worst < -opts.infeas_margin * scale)
      sol.status = SdpStatus::Infeasible;
    return sol;
  }

  // ---- phase 1: maximize t subject to F(x) - t I > 0, t <= t_cap
  Barrier P1;
  P1.k = k + 1;
  for (const auto& b : problem.blocks) {
    Eigen::Index m = b.constant.rows();
    P1.C.push_back(b.constant / scale);
    std::vector<Eigen::MatrixXd> A;
    for (const auto& Ak : b.coeffs) A.push_back(Ak / scale);
    A.push_back(-Eigen::MatrixXd::Identity(m, m));
    P1.A.push_back(std::move(A));
  }
  if (problem.box) add_box(P1, *problem.box, k);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(k + 1);
  double t0 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < P1.C.size(); ++i) t0 = std::min(t0, min_eigenvalue(P1.C[i]));
  const double strict_margin = 1e-3;
  const double t_cap = std::max(1.0, t0 + 1.0);
  {
    std::vector<Eigen::MatrixXd> A(P1.k, Eigen::MatrixXd::Zero(1, 1));
    A[k](0, 0) = -1;
    P1.C.push_back(Eigen::MatrixXd::Constant(1, 1, t_cap));
    P1.A.push_back(std::move(A));
  }
  P1.c = Eigen::VectorXd::Zero(k + 1);
  P1.c(k) = -1;
  x(k) = t0 - 1.0;

  const double nu1 = P1.nu();
  double tau = 1.0;
  const double mu = 8.0;
  bool strictly = t0 > strict_margin;
  double t_upper = std::numeric_limits<double>::infinity();
  int iters = 0;
  while (!strictly) {
    auto cr = center(P1, x, tau, opts.max_iters - iters);
    iters += cr.steps;
    if (!cr.ok) {
      sol.message = "phase 1 lost interiority";
      break;
    }
    double t = x(k);
    t_upper = t + nu1 / tau;
    if (t > strict_margin) {
      strictly = true;
      break;
    }
    if (t_upper < -opts.infeas_margin) break;
    if (nu1 / tau < 1e-12 || iters >= opts.max_iters) break;
    tau *= mu;
  }
  sol.iterations = iters;
  Eigen::VectorXd p = x.head(k);
  double tstar = strictly ? std::max(x(k), t0) : x(k);
  if (t0 > strict_margin) p.setZero();
  sol.phase1_params = p;
  sol.phase1_value = min_all(p);

  if (!strictly && t_upper < -opts.infeas_margin) {
    sol.params = p;
    evaluate(p);
    sol.status = SdpStatus::Infeasible;
    return sol;
  }
  if (!strictly && iters >= opts.max_iters) {
    sol.params = p;
    evaluate(p);
    sol.status = SdpStatus::Indeterminate;
    sol.message = "iteration cap reached in phase 1";
    return sol;
  }

  // ---- phase 2: minimize c.p subject to F(p) + eps I > 0
  if (problem.objective) {
    double eps = tstar > 1e-6 ? 0.0 : 2 * std::abs(tstar) + 1e-10;
    Barrier P2;
    P2.k = k;
    for (const auto& b : problem.blocks) {
      Eigen::Index m = b.constant.rows();
      P2.C.push_back(b.constant / scale + eps * Eigen::MatrixXd::Identity(m, m));
      std::vector<Eigen::MatrixXd> A;
      for (const auto& Ak : b.coeffs) A.push_back(Ak / scale);
      P2.A.push_back(std::move(A));
    }
    if (problem.box) add_box(P2, *problem.box, k);
    P2.c = *problem.objective;
    double cn = std::max(1e-300, P2.c.cwiseAbs().maxCoeff());
    Eigen::VectorXd y = p;
    double nu2 = P2.nu();
    double tau2 = 1.0 / cn;
    bool ok = true;
    while (true) {
      auto cr = center(P2, y, tau2, opts.max_iters - iters);
      iters += cr.steps;
      if (!cr.ok) {
        ok = false;
        sol.message = "phase 2 lost interiority";
        break;
      }
      if (nu2 / tau2 < 1e-11 * cn) break;
      if (iters >= opts.max_iters) {
        ok = false;
        sol.message = "iteration cap reached in phase 2";
        break;
      }
      if (!y.allFinite() || y.cwiseAbs().maxCoeff() > 1e12) {
        ok = false;
        sol.message = "objective appears unbounded";
        break;
      }
      tau2 *= mu;
    }
    sol.iterations = iters;
    // An unconverged but feasible iterate still certifies feasibility.
    if (y.allFinite() && min_all(y) >= -opts.feas_tol * scale) p = y;
    sol.params = p;
    evaluate(p);
    double worst = *std::min_element(sol.min_eig_per_block.begin(), sol.min_eig_per_block.end());
    if (worst < -opts.feas_tol * scale)
      sol.status = SdpStatus::Indeterminate;
    else
      sol.status = ok ? SdpStatus::Optimal : SdpStatus::Feasible;
    return sol;
  }

  sol.params = p;
  evaluate(p);
  double worst = *std::min_element(sol.min_eig_per_block.begin(), sol.min_eig_per_block.end());
  sol.status = worst >= -opts.feas_tol * scale ? SdpStatus::Feasible : SdpStatus::Indeterminate;
  return sol;
}

}  // namespace symsos
