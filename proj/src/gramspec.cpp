#include "symsos/gramspec.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "symsos/sdpcore.hpp"

namespace symsos {

Eigen::MatrixXd AffineBlock::at(const Eigen::VectorXd& p) const {
  Eigen::MatrixXd M = constant;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (p(k) != 0.0) M += p(k) * coeffs[k];
  return M;
}

Eigen::MatrixXd BlockSpectrahedron::gram(const Eigen::VectorXd& p) const {
  Eigen::MatrixXd Q = gram_constant;
  for (std::size_t k = 0; k < gram_coeffs.size(); ++k)
    if (p(k) != 0.0) Q += p(k) * gram_coeffs[k];
  return Q;
}

std::vector<Eigen::MatrixXd> BlockSpectrahedron::block_values(const Eigen::VectorXd& p) const {
  std::vector<Eigen::MatrixXd> out;
  for (const auto& b : blocks) out.push_back(b.at(p));
  return out;
}

Eigen::MatrixXd BlockSpectrahedron::assemble(const std::vector<Eigen::MatrixXd>& bl) const {
  if (bl.size() != layout.entries.size()) throw std::invalid_argument("wrong number of blocks");
  int N = layout.N;
  Eigen::MatrixXd Qp = Eigen::MatrixXd::Zero(N, N);
  for (std::size_t b = 0; b < bl.size(); ++b) {
    const auto& e = layout.entries[b];
    if (bl[b].rows() != e.m || bl[b].cols() != e.m) throw std::invalid_argument("block has wrong size");
    for (int k = 0; k < e.n; ++k) Qp.block(e.offset + k * e.m, e.offset + k * e.m, e.m, e.m) = bl[b];
  }
  return T * Qp * T.transpose();
}

double BlockSpectrahedron::constraint_residual(const std::vector<Eigen::MatrixXd>& bl) const {
  return max_coeff_diff(gram_polynomial(assemble(bl), basis), target);
}

RealPoly gram_polynomial(const Eigen::MatrixXd& Q, const std::vector<Exponent>& basis) {
  int N = static_cast<int>(basis.size());
  RealPoly r(N ? static_cast<int>(basis[0].size()) : 0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (Q(i, j) == 0.0) continue;
      Exponent e = basis[i];
      for (std::size_t v = 0; v < e.size(); ++v) e[v] += basis[j][v];
      r.add_term(e, Q(i, j));
    }
  return r;
}

SparsePoly gram_polynomial(const RationalMatrix& Q, const std::vector<Exponent>& basis) {
  int N = static_cast<int>(basis.size());
  SparsePoly r(N ? static_cast<int>(basis[0].size()) : 0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (Q[i][j] == 0) continue;
      Exponent e = basis[i];
      for (std::size_t v = 0; v < e.size(); ++v) e[v] += basis[j][v];
      r.add_term(e, Q[i][j]);
    }
  return r;
}

namespace {

bool integral_matrix(const Eigen::MatrixXd& g) {
  for (Eigen::Index k = 0; k < g.size(); ++k) {
    double v = g.data()[k];
    if (v != 0.0 && v != 1.0 && v != -1.0) return false;
  }
  return true;
}

}  // namespace

double invariance_defect(const SparsePoly& f, const FiniteGroup& group) {
  double worst = 0;
  for (const auto& g : group.generators()) {
    if (integral_matrix(g)) {
      RationalMatrix A(g.rows(), std::vector<Rational>(g.cols()));
      for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j) A[i][j] = static_cast<int>(g(i, j));
      SparsePoly diff = apply_linear_substitution(f, A) - f;
      for (const auto& kv : diff.terms()) worst = std::max(worst, std::abs(kv.second.get_d()));
    } else {
      RealPoly rf = to_real(f);
      worst = std::max(worst, max_coeff_diff(apply_linear_substitution(rf, g), rf));
    }
  }
  return worst;
}

double invariance_defect(const RealPoly& f, const FiniteGroup& group) {
  double worst = 0;
  for (const auto& g : group.generators())
    worst = std::max(worst, max_coeff_diff(apply_linear_substitution(f, g), f));
  return worst;
}

namespace {

Eigen::MatrixXd to_double(const RationalMatrix& Q) {
  int N = static_cast<int>(Q.size());
  Eigen::MatrixXd M(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) M(i, j) = Q[i][j].get_d();
  return M;
}

std::string pair_name(int r, int c) {
  return "q" + std::to_string(r + 1) + std::to_string(c + 1);
}

void build_exact(const SparsePoly& f, const GroupRep& rep, BlockSpectrahedron& bs) {
  const auto& basis = rep.basis();
  int N = static_cast<int>(basis.size());
  const auto& G = rep.group();

  // basis permutation of each group element
  std::vector<std::vector<int>> perm(G.order(), std::vector<int>(N));
  for (std::size_t g = 0; g < G.order(); ++g) {
    const auto& D = rep.monomial_action(g);
    for (int j = 0; j < N; ++j) {
      Eigen::Index r;
      D.col(j).maxCoeff(&r);
      perm[g][j] = static_cast<int>(r);
    }
  }
  // orbits of unordered index pairs, numbered by first appearance row by row
  std::vector<std::vector<int>> pid(N, std::vector<int>(N, -1));
  std::vector<std::pair<int, int>> rep_pair;
  for (int r = 0; r < N; ++r)
    for (int c = r; c < N; ++c) {
      if (pid[r][c] >= 0) continue;
      int id = static_cast<int>(rep_pair.size());
      rep_pair.emplace_back(r, c);
      for (std::size_t g = 0; g < G.order(); ++g) {
        int a = perm[g][r], b = perm[g][c];
        pid[a][b] = pid[b][a] = id;
      }
    }
  int V = static_cast<int>(rep_pair.size());

  // coefficient matching rows
  std::map<Exponent, int, GrlexDescending> row_of;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      Exponent e = basis[r];
      for (std::size_t v = 0; v < e.size(); ++v) e[v] += basis[c][v];
      row_of.try_emplace(e, 0);
    }
  int M = 0;
  for (auto& kv : row_of) kv.second = M++;
  std::vector<std::vector<Rational>> A(M, std::vector<Rational>(V, 0));
  std::vector<Rational> rhs(M, 0);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      Exponent e = basis[r];
      for (std::size_t v = 0; v < e.size(); ++v) e[v] += basis[c][v];
      A[row_of.at(e)][pid[r][c]] += 1;
    }
  for (const auto& [e, coef] : f.terms()) {
    auto it = row_of.find(e);
    if (it == row_of.end()) throw std::invalid_argument("polynomial has a monomial of the wrong degree");
    rhs[it->second] = coef;
  }

  // reduced row echelon form, pivots taken from the last variable backwards
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = V - 1; col >= 0 && rank < M; --col) {
    int sel = -1;
    for (int i = rank; i < M; ++i)
      if (A[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(A[sel], A[rank]);
    std::swap(rhs[sel], rhs[rank]);
    Rational piv = A[rank][col];
    for (auto& v : A[rank]) v /= piv;
    rhs[rank] /= piv;
    for (int i = 0; i < M; ++i) {
      if (i == rank || A[i][col] == 0) continue;
      Rational factor = A[i][col];
      for (int j = 0; j < V; ++j)
        if (A[rank][j] != 0) A[i][j] -= factor * A[rank][j];
      rhs[i] -= factor * rhs[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int i = rank; i < M; ++i)
    if (rhs[i] != 0) throw std::invalid_argument("coefficient matching system is inconsistent");

  std::vector<int> pivot_row(V, -1);
  for (int i = 0; i < rank; ++i) pivot_row[pivot_col[i]] = i;
  std::vector<int> free_vars;
  for (int v = 0; v < V; ++v)
    if (pivot_row[v] < 0) free_vars.push_back(v);
  int K = static_cast<int>(free_vars.size());
  for (int v : free_vars) bs.free_params.push_back(pair_name(rep_pair[v].first, rep_pair[v].second));

  // each variable as constant + sum coeff_k p_k
  std::vector<Rational> var_const(V, 0);
  std::vector<std::vector<Rational>> var_coef(V, std::vector<Rational>(K, 0));
  for (int k = 0; k < K; ++k) var_coef[free_vars[k]][k] = 1;
  for (int v = 0; v < V; ++v) {
    int i = pivot_row[v];
    if (i < 0) continue;
    var_const[v] = rhs[i];
    for (int k = 0; k < K; ++k) var_coef[v][k] = -A[i][free_vars[k]];
  }
  bs.exact_gram_constant.assign(N, std::vector<Rational>(N, 0));
  bs.exact_gram_coeffs.assign(K, RationalMatrix(N, std::vector<Rational>(N, 0)));
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      int v = pid[r][c];
      bs.exact_gram_constant[r][c] = var_const[v];
      for (int k = 0; k < K; ++k) bs.exact_gram_coeffs[k][r][c] = var_coef[v][k];
    }
  bs.gram_constant = to_double(bs.exact_gram_constant);
  for (const auto& Q : bs.exact_gram_coeffs) bs.gram_coeffs.push_back(to_double(Q));
  bs.exact = true;
}

void build_float(const RealPoly& f, const GroupRep& rep, const SymAdaptedBasis& sab,
                 BlockSpectrahedron& bs) {
  const auto& basis = rep.basis();
  int N = static_cast<int>(basis.size());
  std::map<Exponent, int, GrlexDescending> row_of;
  std::vector<std::vector<int>> mono(N, std::vector<int>(N));
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      Exponent e = basis[r];
      for (std::size_t v = 0; v < e.size(); ++v) e[v] += basis[c][v];
      row_of.try_emplace(e, 0);
    }
  int M = 0;
  for (auto& kv : row_of) kv.second = M++;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      Exponent e = basis[r];
      for (std::size_t v = 0; v < e.size(); ++v) e[v] += basis[c][v];
      mono[r][c] = row_of.at(e);
    }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(M);
  for (const auto& [e, coef] : f.terms()) {
    auto it = row_of.find(e);
    if (it == row_of.end()) throw std::invalid_argument("polynomial has a monomial of the wrong degree");
    rhs(it->second) = coef;
  }

  // unknowns: upper-triangular entries of each block
  struct Unknown {
    int block, a, b;
  };
  std::vector<Unknown> unk;
  for (std::size_t b = 0; b < sab.layout.entries.size(); ++b)
    for (int i = 0; i < sab.layout.entries[b].m; ++i)
      for (int j = i; j < sab.layout.entries[b].m; ++j) unk.push_back({static_cast<int>(b), i, j});
  int Y = static_cast<int>(unk.size());
  std::vector<Eigen::MatrixXd> unit_gram;
  Eigen::MatrixXd Amat = Eigen::MatrixXd::Zero(M, Y);
  for (int y = 0; y < Y; ++y) {
    const auto& e = sab.layout.entries[unk[y].block];
    Eigen::MatrixXd Qc = Eigen::MatrixXd::Zero(N, N);
    for (int k = 0; k < e.n; ++k) {
      Eigen::VectorXd ta = sab.T.col(e.offset + k * e.m + unk[y].a);
      Eigen::VectorXd tb = sab.T.col(e.offset + k * e.m + unk[y].b);
      if (unk[y].a == unk[y].b) Qc += ta * ta.transpose();
      else Qc += ta * tb.transpose() + tb * ta.transpose();
    }
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) Amat(mono[r][c], y) += Qc(r, c);
    unit_gram.push_back(std::move(Qc));
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(Amat, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  double smax = s.size() ? s(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > 1e-9 * smax) ++rank;
  Eigen::VectorXd y0 = Eigen::VectorXd::Zero(Y);
  for (int i = 0; i < rank; ++i)
    y0 += (svd.matrixU().col(i).dot(rhs) / s(i)) * svd.matrixV().col(i);
  double resid = (Amat * y0 - rhs).cwiseAbs().maxCoeff();
  double fscale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
  if (resid > 1e-8 * fscale)
    throw std::invalid_argument("polynomial is not in the span of invariant Gram forms");
  int K = Y - rank;
  Eigen::MatrixXd Z = svd.matrixV().rightCols(K);

  auto gram_of = [&](const Eigen::VectorXd& yv) {
    Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(N, N);
    for (int y = 0; y < Y; ++y)
      if (yv(y) != 0.0) Q += yv(y) * unit_gram[y];
    return Q;
  };
  bs.gram_constant = gram_of(y0);
  for (int k = 0; k < K; ++k) {
    bs.gram_coeffs.push_back(gram_of(Z.col(k)));
    bs.free_params.push_back("t" + std::to_string(k + 1));
  }
  // block values straight from the unknowns
  auto blocks_of = [&](const Eigen::VectorXd& yv) {
    std::vector<Eigen::MatrixXd> out;
    for (const auto& e : sab.layout.entries) out.push_back(Eigen::MatrixXd::Zero(e.m, e.m));
    for (int y = 0; y < Y; ++y) {
      auto& B = out[unk[y].block];
      B(unk[y].a, unk[y].b) = yv(y);
      B(unk[y].b, unk[y].a) = yv(y);
    }
    return out;
  };
  auto b0 = blocks_of(y0);
  std::vector<std::vector<Eigen::MatrixXd>> bk;
  for (int k = 0; k < K; ++k) bk.push_back(blocks_of(Z.col(k)));
  for (std::size_t b = 0; b < sab.layout.entries.size(); ++b) {
    AffineBlock ab;
    ab.label = sab.layout.entries[b].label;
    ab.irrep_dim = sab.layout.entries[b].n;
    ab.constant = b0[b];
    for (int k = 0; k < K; ++k) ab.coeffs.push_back(bk[k][b]);
    bs.blocks.push_back(std::move(ab));
  }
}

}  // namespace

BlockSpectrahedron build_spectrahedron(const SparsePoly& f, const GroupRep& rep,
                                       const SymAdaptedBasis& sab) {
  if (f.num_vars() != rep.num_vars()) throw std::invalid_argument("variable count mismatch");
  if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != 2 * rep.degree()))
    throw std::invalid_argument("polynomial must be homogeneous of degree " +
                                std::to_string(2 * rep.degree()));
  double defect = invariance_defect(f, rep.group());
  double fscale = 0;
  for (const auto& kv : f.terms()) fscale = std::max(fscale, std::abs(kv.second.get_d()));
  if (defect > 1e-9 * std::max(1.0, fscale))
    throw std::invalid_argument("polynomial is not invariant; max violated coefficient " +
                                std::to_string(defect));

  BlockSpectrahedron bs;
  bs.n = rep.num_vars();
  bs.half_degree = rep.degree();
  bs.basis = rep.basis();
  bs.T = sab.T;
  bs.layout = sab.layout;
  bs.target = to_real(f);

  if (rep.is_permutation_action() && rep.group().is_permutation_group()) {
    build_exact(f, rep, bs);
    for (const auto& e : sab.layout.entries) {
      AffineBlock ab;
      ab.label = e.label;
      ab.irrep_dim = e.n;
      Eigen::MatrixXd T0 = copy_columns(sab.T, e, 0);
      ab.constant = T0.transpose() * bs.gram_constant * T0;
      for (const auto& Qk : bs.gram_coeffs) ab.coeffs.push_back(T0.transpose() * Qk * T0);
      bs.blocks.push_back(std::move(ab));
    }
  } else {
    build_float(bs.target, rep, sab, bs);
  }
  return bs;
}

Eigen::MatrixXd reynolds(const Eigen::MatrixXd& Q, const GroupRep& rep) {
  int N = rep.dim();
  if (Q.rows() != N || Q.cols() != N) throw std::invalid_argument("reynolds: wrong size");
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(N, N);
  for (std::size_t g = 0; g < rep.group().order(); ++g)
    R += rep.action(g).transpose() * Q * rep.action(g);
  return R / static_cast<double>(rep.group().order());
}

int cone_dimension(const std::vector<int>& multiplicities) {
  int s = 0;
  for (int m : multiplicities) s += m * (m + 1) / 2;
  return s;
}

Eigen::MatrixXd trivial_block(const Eigen::MatrixXd& Q, const std::vector<std::vector<int>>& orbits,
                              double tol) {
  int p = static_cast<int>(orbits.size());
  Eigen::MatrixXd B(p, p);
  double scale = std::max(1.0, Q.cwiseAbs().maxCoeff());
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      // every column of the orbit block must have the same sum
      double first = 0, total = 0;
      for (std::size_t cc = 0; cc < orbits[j].size(); ++cc) {
        double col = 0;
        for (int r : orbits[i]) col += Q(r, orbits[j][cc]);
        if (cc == 0) first = col;
        else if (std::abs(col - first) > tol * scale)
          throw std::invalid_argument("trivial_block: Q is not invariant");
        total += col;
      }
      B(i, j) = total / std::sqrt(double(orbits[i].size()) * double(orbits[j].size()));
    }
  return B;
}

std::set<int> extremal_ray_ranks(const BlockLayout& layout) {
  std::set<int> r;
  for (const auto& e : layout.entries)
    if (e.m > 0) r.insert(e.n);
  return r;
}

bool is_extremal(const std::vector<Eigen::MatrixXd>& blocks, double rel_tol) {
  double smax = 0;
  for (const auto& B : blocks)
    if (B.size()) smax = std::max(smax, Eigen::JacobiSVD<Eigen::MatrixXd>(B).singularValues()(0));
  if (smax == 0) return false;
  int ones = 0;
  for (const auto& B : blocks) {
    if (B.size() == 0) continue;
    const auto s = Eigen::JacobiSVD<Eigen::MatrixXd>(B).singularValues();
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > rel_tol * smax) ++r;
    if (r == 1) ++ones;
    else if (r != 0) return false;
  }
  return ones == 1;
}

}  // namespace symsos
