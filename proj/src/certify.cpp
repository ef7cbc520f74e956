#include "symsos/certify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace symsos {

GroupDescriptor describe_group(const GroupRep& rep) {
  GroupDescriptor g;
  g.n = rep.num_vars();
  g.name = rep.group().name();
  g.generators = rep.group().generators();
  g.kind = rep.is_symmetric_group() ? "symmetric" : "matrix";
  return g;
}

RankProfile rank_profile(const SosCertificate& cert) {
  RankProfile rp;
  for (const auto& b : cert.blocks) {
    rp.blocks.push_back(b.rank);
    rp.total += b.n * b.rank;
  }
  return rp;
}

const char* to_string(CertifyStatus s) {
  switch (s) {
    case CertifyStatus::Feasible: return "Feasible";
    case CertifyStatus::Infeasible: return "Infeasible";
    case CertifyStatus::Indeterminate: return "Indeterminate";
  }
  return "?";
}

CertifyContext prepare(const SparsePoly& f, const GroupRep& rep) {
  GroupRep orep = orthogonalized(rep);
  SymAdaptedBasis sab = symmetry_adapted_basis(orep);
  BlockSpectrahedron bs = build_spectrahedron(f, orep, sab);
  return {std::move(orep), std::move(sab), std::move(bs)};
}

SdpProblem make_sdp(const BlockSpectrahedron& bs) {
  SdpProblem p;
  p.num_params = bs.num_params();
  for (const auto& b : bs.blocks) p.blocks.push_back({b.constant, b.coeffs});
  return p;
}

Eigen::VectorXd trace_objective(const BlockSpectrahedron& bs) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(bs.num_params());
  for (const auto& b : bs.blocks)
    for (int k = 0; k < bs.num_params(); ++k) c(k) += b.irrep_dim * b.coeffs[k].trace();
  return c;
}

Eigen::VectorXd block_objective(const BlockSpectrahedron& bs, const std::vector<Eigen::MatrixXd>& C) {
  if (C.size() != bs.blocks.size()) throw std::invalid_argument("one objective matrix per block");
  Eigen::VectorXd c = Eigen::VectorXd::Zero(bs.num_params());
  for (std::size_t b = 0; b < bs.blocks.size(); ++b)
    for (int k = 0; k < bs.num_params(); ++k)
      c(k) += bs.blocks[b].irrep_dim * C[b].cwiseProduct(bs.blocks[b].coeffs[k]).sum();
  return c;
}

namespace {

double global_smax(const std::vector<Eigen::MatrixXd>& blocks) {
  double smax = 0;
  for (const auto& B : blocks)
    if (B.size()) smax = std::max(smax, Eigen::JacobiSVD<Eigen::MatrixXd>(B).singularValues()(0));
  return smax;
}

}  // namespace

std::vector<int> block_ranks(const std::vector<Eigen::MatrixXd>& blocks, double rel_tol) {
  double smax = global_smax(blocks);
  std::vector<int> r;
  for (const auto& B : blocks) {
    if (B.size() == 0 || smax == 0) {
      r.push_back(0);
      continue;
    }
    const auto s = Eigen::JacobiSVD<Eigen::MatrixXd>(B).singularValues();
    int k = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > rel_tol * smax) ++k;
    r.push_back(k);
  }
  return r;
}

SosCertificate extract_certificate(const SparsePoly& f, const CertifyContext& ctx,
                                   const Eigen::VectorXd& params, double rank_tol) {
  const auto& bs = ctx.spec;
  SosCertificate cert;
  cert.f = f;
  cert.n = bs.n;
  cert.degree = 2 * bs.half_degree;
  cert.group = describe_group(ctx.rep);
  cert.basis = bs.basis;
  cert.T = bs.T;
  cert.layout = bs.layout;
  cert.params = params;
  auto values = bs.block_values(params);
  double smax = global_smax(values);
  auto ranks = block_ranks(values, rank_tol);
  RealPoly total(bs.n);
  for (std::size_t b = 0; b < values.size(); ++b) {
    const auto& e = bs.layout.entries[b];
    CertBlock cb{e.label, e.m, e.n, values[b], ranks[b]};
    RealPoly partial(bs.n);
    if (ranks[b] > 0) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (values[b] + values[b].transpose()));
      const auto& ev = es.eigenvalues();
      if (ev(0) < -1e-7 * smax)
        throw std::runtime_error("block " + e.label + " is not positive semidefinite");
      for (int k = 0; k < e.n; ++k) {
        Eigen::MatrixXd Tk = copy_columns(bs.T, e, k);
        for (Eigen::Index i = ev.size() - 1; i >= 0; --i) {
          if (ev(i) <= rank_tol * smax) break;
          Eigen::VectorXd w = std::sqrt(ev(i)) * es.eigenvectors().col(i);
          Eigen::Index big;
          w.cwiseAbs().maxCoeff(&big);
          if (w(big) < 0) w = -w;
          Eigen::VectorXd coeffs = Tk * w;
          RealPoly q(bs.n);
          for (std::size_t r = 0; r < bs.basis.size(); ++r)
            if (coeffs(r) != 0.0) q.add_term(bs.basis[r], coeffs(r));
          partial += q * q;
          cert.squares.push_back({e.label, static_cast<int>(b), k, std::move(q)});
        }
      }
    }
    total += partial;
    cert.partial_sums.push_back(std::move(partial));
    cert.blocks.push_back(std::move(cb));
  }
  cert.residual = max_coeff_diff(total, to_real(f));
  return cert;
}

namespace {

SosCertificate zero_certificate(const SparsePoly& f, const GroupRep& rep) {
  SosCertificate cert;
  cert.f = f;
  cert.n = f.num_vars();
  cert.degree = 0;
  cert.group = describe_group(rep);
  cert.residual = 0;
  return cert;
}

}  // namespace

CertifyResult certify(const SparsePoly& f, const GroupRep& rep, const CertifyOptions& opts) {
  CertifyResult res;
  if (f.num_vars() != rep.num_vars()) throw std::invalid_argument("variable count mismatch");
  if (f.is_zero()) {
    res.status = CertifyStatus::Feasible;
    res.certificate = zero_certificate(f, rep);
    res.sdp.status = SdpStatus::Feasible;
    return res;
  }
  if (!f.is_homogeneous()) throw std::invalid_argument("polynomial must be homogeneous");
  if (f.degree() % 2) throw std::invalid_argument("polynomial has odd degree");
  if (f.degree() != 2 * rep.degree())
    throw std::invalid_argument("rep degree does not match half the polynomial degree");

  CertifyContext ctx = prepare(f, rep);
  SdpProblem prob = make_sdp(ctx.spec);
  if (opts.trace_objective) prob.objective = trace_objective(ctx.spec);
  res.sdp = solve(prob, opts.sdp);
  if (res.sdp.status == SdpStatus::Infeasible) {
    res.status = CertifyStatus::Infeasible;
    res.message = "no PSD Gram matrix in the invariant slice";
    return res;
  }
  if (res.sdp.status == SdpStatus::Indeterminate) {
    res.status = CertifyStatus::Indeterminate;
    res.message = res.sdp.message;
    return res;
  }
  SosCertificate best = extract_certificate(f, ctx, res.sdp.params, opts.rank_tol);
  if (opts.vertex_search > 0) {
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> normal;
    for (int s = 0; s < opts.vertex_search; ++s) {
      std::vector<Eigen::MatrixXd> C;
      for (const auto& e : ctx.spec.layout.entries) {
        Eigen::MatrixXd M(e.m, e.m);
        for (int i = 0; i < e.m; ++i)
          for (int j = 0; j <= i; ++j) M(i, j) = M(j, i) = normal(rng);
        C.push_back(M);
      }
      SdpProblem p2 = prob;
      p2.objective = block_objective(ctx.spec, C);
      SdpSolution s2 = solve(p2, opts.sdp);
      if (s2.status != SdpStatus::Optimal && s2.status != SdpStatus::Feasible) continue;
      SosCertificate c2 = extract_certificate(f, ctx, s2.params, opts.rank_tol);
      if (c2.residual <= 1e-7 && rank_profile(c2).total < rank_profile(best).total) best = c2;
    }
  }
  if (best.residual > 1e-7) {
    res.status = CertifyStatus::Indeterminate;
    res.message = "reconstruction residual " + std::to_string(best.residual) + " too large";
    res.certificate = std::move(best);
    return res;
  }
  res.status = CertifyStatus::Feasible;
  res.certificate = std::move(best);
  return res;
}

CertifyResult certify_symmetric(const SparsePoly& f, const CertifyOptions& opts) {
  int n = f.num_vars();
  if (f.is_zero()) return certify(f, GroupRep::symmetric(n, 0), opts);
  if (!f.is_homogeneous() || f.degree() % 2)
    throw std::invalid_argument("polynomial must be homogeneous of even degree");
  return certify(f, GroupRep::symmetric(n, f.degree() / 2), opts);
}

VerifyReport verify(const SparsePoly& f, const SosCertificate& cert) {
  VerifyReport rep;
  int n = f.num_vars();
  if (cert.n != n && !(cert.squares.empty() && cert.n == 0))
    throw std::invalid_argument("certificate variable count does not match");
  RealPoly total(n);
  std::vector<RealPoly> partial(cert.blocks.size(), RealPoly(n));
  std::vector<int> count(cert.blocks.size(), 0);
  for (const auto& sq : cert.squares) {
    if (sq.block < 0 || sq.block >= static_cast<int>(cert.blocks.size()))
      throw std::invalid_argument("square refers to a missing block");
    RealPoly s = sq.poly * sq.poly;
    partial[sq.block] += s;
    total += s;
    ++count[sq.block];
  }
  rep.residual = max_coeff_diff(total, to_real(f));
  FiniteGroup G = cert.group.kind == "symmetric" ? FiniteGroup::symmetric(cert.group.n)
                                                 : FiniteGroup::from_generators(cert.group.generators);
  for (const auto& p : partial) rep.invariance_defect = std::max(rep.invariance_defect, invariance_defect(p, G));
  rep.min_block_eig = std::numeric_limits<double>::infinity();
  for (std::size_t b = 0; b < cert.blocks.size(); ++b) {
    const auto& B = cert.blocks[b];
    if (B.Q.size()) rep.min_block_eig = std::min(rep.min_block_eig, min_eigenvalue(B.Q));
    if (count[b] != B.n * B.rank) rep.square_count_ok = false;
  }
  if (cert.blocks.empty()) rep.min_block_eig = 0;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

json matrix_json(const Eigen::MatrixXd& M) {
  json a = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    a.push_back(row);
  }
  return a;
}

Eigen::MatrixXd json_matrix(const json& a) {
  Eigen::Index r = static_cast<Eigen::Index>(a.size());
  Eigen::Index c = r ? static_cast<Eigen::Index>(a[0].size()) : 0;
  Eigen::MatrixXd M(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(a[i].size()) != c) throw std::invalid_argument("ragged matrix");
    for (Eigen::Index j = 0; j < c; ++j) M(i, j) = a[i][j].get<double>();
  }
  return M;
}

std::string monomial_text(const Exponent& e) {
  return render_poly(SparsePoly::monomial(e, 1));
}

}  // namespace

std::string certificate_to_json(const SosCertificate& cert, int indent) {
  json j;
  j["schema"] = 1;
  j["n"] = cert.n;
  j["degree"] = cert.degree;
  json g;
  g["kind"] = cert.group.kind;
  g["n"] = cert.group.n;
  if (cert.group.kind != "symmetric") {
    g["name"] = cert.group.name;
    json gens = json::array();
    for (const auto& M : cert.group.generators) gens.push_back(matrix_json(M));
    g["generators"] = gens;
  }
  j["group"] = g;
  j["f"] = render_poly(cert.f);
  json basis = json::array();
  for (const auto& e : cert.basis) basis.push_back(monomial_text(e));
  j["basis"] = basis;
  j["T"] = matrix_json(cert.T);
  json layout = json::array();
  for (const auto& e : cert.layout.entries)
    layout.push_back({{"label", e.label}, {"m", e.m}, {"n", e.n}, {"offset", e.offset}});
  j["layout"] = layout;
  json blocks = json::array();
  for (const auto& b : cert.blocks)
    blocks.push_back({{"label", b.label}, {"m", b.m}, {"n", b.n}, {"Q", matrix_json(b.Q)}, {"rank", b.rank}});
  j["blocks"] = blocks;
  json squares = json::array();
  for (const auto& s : cert.squares)
    squares.push_back({{"label", s.label}, {"block", s.block}, {"copy", s.copy}, {"poly", render_poly(s.poly)}});
  j["squares"] = squares;
  j["residual"] = cert.residual;
  return j.dump(indent);
}

SosCertificate certificate_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.value("schema", 0) != 1) throw std::invalid_argument("unsupported certificate schema");
  SosCertificate c;
  c.n = j.at("n").get<int>();
  c.degree = j.at("degree").get<int>();
  const auto& g = j.at("group");
  c.group.kind = g.at("kind").get<std::string>();
  c.group.n = g.at("n").get<int>();
  if (c.group.kind == "symmetric") {
    c.group.generators = FiniteGroup::symmetric(c.group.n).generators();
    c.group.name = "S" + std::to_string(c.group.n);
  } else {
    c.group.name = g.value("name", std::string());
    for (const auto& M : g.at("generators")) c.group.generators.push_back(json_matrix(M));
  }
  if (c.n > 0) {
    c.f = parse_poly(j.at("f").get<std::string>(), c.n);
    for (const auto& b : j.at("basis")) {
      SparsePoly m = parse_poly(b.get<std::string>(), c.n);
      if (m.size() != 1) throw std::invalid_argument("basis entry is not a monomial");
      c.basis.push_back(m.terms().begin()->first);
    }
  }
  c.T = json_matrix(j.at("T"));
  c.layout.N = static_cast<int>(c.basis.size());
  for (const auto& e : j.at("layout"))
    c.layout.entries.push_back({e.at("label").get<std::string>(), 0, e.at("m").get<int>(),
                                e.at("n").get<int>(), e.at("offset").get<int>()});
  for (const auto& b : j.at("blocks"))
    c.blocks.push_back({b.at("label").get<std::string>(), b.at("m").get<int>(), b.at("n").get<int>(),
                        json_matrix(b.at("Q")), b.at("rank").get<int>()});
  c.partial_sums.assign(c.blocks.size(), RealPoly(c.n));
  for (const auto& s : j.at("squares")) {
    CertSquare sq{s.at("label").get<std::string>(), s.at("block").get<int>(), s.at("copy").get<int>(),
                  parse_real_poly(s.at("poly").get<std::string>(), c.n)};
    if (sq.block >= 0 && sq.block < static_cast<int>(c.partial_sums.size()))
      c.partial_sums[sq.block] += sq.poly * sq.poly;
    c.squares.push_back(std::move(sq));
  }
  c.residual = j.at("residual").get<double>();
  return c;
}

}  // namespace symsos
