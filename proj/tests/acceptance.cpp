// One PASS/FAIL line per acceptance criterion; exit code 1 if any fail.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "symsos/certify.hpp"
#include "symsos/families.hpp"
#include "symsos/gramspec.hpp"
#include "symsos/hposet.hpp"
#include "symsos/repsn.hpp"
#include "symsos/survey.hpp"
#include "symsos/symadapt.hpp"
#include "symsos/symfunc.hpp"

using namespace symsos;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& msg) {
    if (!cond && ok) why << msg;
    ok = ok && cond;
  }
};

int failures = 0;

void run(const std::string& id, double budget_s, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(dt <= budget_s, "over time budget");
  std::cout << id << " " << (c.ok ? "PASS" : "FAIL") << " (" << dt << " s)";
  if (!c.ok) std::cout << " " << c.why.str();
  std::cout << std::endl;
  if (!c.ok) ++failures;
}

std::int64_t binom(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

int main() {
  run("AC1", 30, [](Check& c) {
    for (int n = 2; n <= 5; ++n)
      for (int d = 0; d <= 8; ++d) {
        std::int64_t sum = 0;
        for (const auto& lam : partitions_of(n)) {
          std::int64_t m = multiplicity(lam, d);
          c.require(m == multiplicity_oracle(lam, d), "multiplicity mismatch at " + lam.to_string());
          sum += irrep_dimension(lam) * m;
        }
        c.require(sum == binom(n + d - 1, d), "dimension sum mismatch");
      }
  });

  run("AC2", 1, [](Check& c) {
    for (int d = 0; d <= 24; ++d) {
      c.require(quasi_poly_Q(d) == Rational(multiplicity(Partition({3}), d)), "Q at d=" + std::to_string(d));
      c.require(quasi_poly_P(d - 1) == Rational(multiplicity(Partition({2, 1}), d)),
                "P at d=" + std::to_string(d));
    }
  });

  run("AC3", 60, [](Check& c) {
    for (int d = 0; d <= 15; ++d) {
      int want = d % 2 ? (d + 1) * (d + 3) / 4 : (d + 2) * (d + 2) / 4;
      c.require(cone_dimension(GroupRep::symmetric(2, d).multiplicities()) == want,
                "cone dimension at d=" + std::to_string(d));
    }
  });

  run("AC4", 120, [](Check& c) {
    for (int n = 2; n <= 4; ++n)
      for (int d = 0; d <= 4; ++d) {
        GroupRep rep = orthogonalized(GroupRep::symmetric(n, d));
        SymAdaptedBasis sab = symmetry_adapted_basis(rep);
        std::string at = " n=" + std::to_string(n) + " d=" + std::to_string(d);
        c.require(verify_block_structure(rep, sab.T, sab.layout) <= 1e-9, "block structure" + at);
        c.require(copy_agreement(rep, sab) <= 1e-9, "copy agreement" + at);
      }
  });

  run("AC5", 10, [](Check& c) {
    SparsePoly f = parse_poly("1/54*x1^6 + 1/54*x2^6 + 1/54*x3^6 - 1/18*x1^2*x2^2*x3^2", 3);
    // the same polynomial from the complete homogeneous functions
    SparsePoly h = substitute_squares(term_normalize(basis_poly(SymBasis::h, Partition({2, 1}), 3)) -
                                      term_normalize(basis_poly(SymBasis::h, Partition({1, 1, 1}), 3)));
    c.require(h == f, "h-difference does not match the sextic");
    CertifyOptions o;
    o.vertex_search = 8;
    CertifyResult r = certify_symmetric(f, o);
    c.require(r.status == CertifyStatus::Feasible && r.certificate.has_value(), "not feasible");
    if (!r.certificate) return;
    c.require(rank_profile(*r.certificate).total == 4, "total rank != 4");
    c.require(r.certificate->squares.size() == 4, "square count != 4");
    VerifyReport v = verify(f, *r.certificate);
    c.require(v.residual <= 1e-8, "residual");
    c.require(v.invariance_defect <= 1e-8, "partial sum not invariant");
  });

  run("AC6", 5, [](Check& c) {
    SparsePoly f = parse_poly("7/16*x1^8 - 1/4*x1^6*x2^2 - 3/8*x1^4*x2^4 - 1/4*x1^2*x2^6 + 7/16*x2^8", 2);
    const double s2 = std::sqrt(2.0);
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(5, 5);
    D(0, 0) = 7.0 / 8;
    D(0, 2) = D(2, 0) = -7 * s2 / 8;
    D(2, 2) = 7.0 / 4;
    D(4, 4) = 3;
    Eigen::MatrixXd Q = binary_change_of_basis(4) * D * binary_change_of_basis(4).transpose();
    c.require(max_coeff_diff(gram_polynomial(Q, monomials(2, 4)), to_real(f)) <= 1e-9, "constraints");
    c.require(min_eigenvalue(D) >= -1e-12, "not PSD");
    c.require(certify_symmetric(f).status == CertifyStatus::Feasible, "certify not feasible");
  });

  run("AC7", 120, [](Check& c) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> nd(2, 12);
    std::uniform_real_distribution<double> coef(-2, 2);
    int checked = 0;
    for (int it = 0; it < 10000; ++it) {
      int n = nd(rng);
      Rational a(coef(rng)), b(coef(rng));
      if (it % 10 == 0) b = a;  // upper face
      if (it % 10 == 1) b = -a / (n - 1);  // lower face
      if (it % 50 == 2) a = b = 0;
      QuadraticAnalysis q = quadratic_analyze(a, b, n);
      Eigen::MatrixXd M = Eigen::MatrixXd::Constant(n, n, b.get_d());
      M.diagonal().setConstant(a.get_d());
      Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(M).eigenvalues();
      if (q.sos) c.require(q.rank == 0 || q.rank == 1 || q.rank == n - 1 || q.rank == n, "rank outside set");
      bool exact_face = (it % 10 <= 1) || (it % 50 == 2);
      bool in_band = false;
      for (int k = 0; k < n; ++k) in_band = in_band || std::abs(ev(k)) < 1e-6;
      if (in_band && !exact_face) continue;
      ++checked;
      bool sos = ev.minCoeff() >= -1e-12;
      int rank = 0;
      for (int k = 0; k < n; ++k) rank += std::abs(ev(k)) > 1e-6;
      c.require(q.sos == sos, "SOS disagreement");
      if (sos) c.require(q.rank == rank, "rank disagreement");
    }
    c.require(checked > 9000, "too few checked samples");
    c.require(std::abs(quadratic_sos_ratio(1e6) - 0.125) <= 1e-6, "limit ratio");
    // uniform directions in the (a, b) plane, n = 5
    const int N = 1000000, n = 5;
    std::normal_distribution<double> normal;
    int hits = 0;
    for (int s = 0; s < N; ++s) {
      double a = normal(rng), b = normal(rng);
      hits += (a - b >= 0 && a + (n - 1) * b >= 0);
    }
    double p = quadratic_sos_ratio(n), est = static_cast<double>(hits) / N;
    c.require(std::abs(est - p) <= 3 * std::sqrt(p * (1 - p) / N), "Monte Carlo ratio");
    // spot-check the sampled criterion against the analyzer
    for (int s = 0; s < 2000; ++s) {
      double a = normal(rng), b = normal(rng);
      bool want = a - b >= 0 && a + (n - 1) * b >= 0;
      c.require(quadratic_analyze(Rational(a), Rational(b), n).sos == want, "sampled criterion");
    }
  });

  run("AC8", 300, [](Check& c) {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> normal;
    for (int it = 0; it < 200; ++it) {
      QuarticFromBlocks gen = testgen::generic_sos_quartic(rng);
      const QuarticCoeffs& q = gen.coeffs;
      QuarticAnalysis a = quartic_analyze(q);
      std::string at = " instance " + std::to_string(it);
      c.require(a.sos != SdpStatus::Infeasible, "SOS instance rejected" + at);
      c.require(a.necessary_ok(), "necessary inequality" + at);
      c.require(a.psd_vertex_count() == 2, "PSD vertex count" + at);
      if (a.psd_vertex_count() != 2) continue;
      auto vs = a.psd_vertices();
      for (const auto& v : vs) c.require(quartic_boundary_rank(q, v) == 3, "vertex rank" + at);
      c.require(quartic_boundary_rank(q, (vs[0] + vs[1]) / 2) == 6, "midpoint rank" + at);
      Eigen::Vector2d interior(gen.q12.get_d(), gen.q16.get_d());
      c.require(quartic_boundary_rank(q, interior) == 6, "interior rank" + at);
      bool saw1 = false, saw2 = false;
      for (int k = 0; k < 16 && !(saw1 && saw2); ++k) {
        Eigen::Vector2d dir(normal(rng), normal(rng));
        auto hit = quartic_ray_hit(q, interior, dir.normalized());
        c.require(hit.has_value(), "ray escaped" + at);
        if (!hit) continue;
        if (hit->which == 1) {
          saw1 = true;
          c.require(a.k1.kind == ConicKind::Parabola, "K1 kind" + at);
          c.require(quartic_boundary_rank(q, hit->point) == 5, "parabola rank" + at);
        } else if (hit->which == 2) {
          saw2 = true;
          c.require(a.k2.kind == ConicKind::Hyperbola, "K2 kind" + at);
          c.require(quartic_boundary_rank(q, hit->point) == 4, "hyperbola rank" + at);
        }
      }
    }
    QuarticAnalysis bad = quartic_analyze({1, 2, 1, 0});
    c.require(bad.sos == SdpStatus::Infeasible, "1,2,1,0 accepted");
    c.require(bad.witness.has_value() && *bad.witness == std::array<int, 3>{1, -2, 1}, "witness point");
    c.require(bad.witness_value == -9, "witness value");
    c.require(eval(QuarticCoeffs{1, 2, 1, 0}.poly(), {1, -2, 1}) == -9, "witness evaluation");
  });

  run("AC9", 600, [](Check& c) {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 100; ++it) {
      SexticCoeffs s;
      for (auto& x : s.a) x = testgen::rational(rng, 30, 9);
      SexticObstructions o = sextic_rank3_obstructions(s);
      c.require(o.case_a != 0 && o.case_b != 0, "vanishing obstruction");
    }
    for (int k = 0; k < 3; ++k) {
      SparsePoly f = testgen::dense_sos_symmetric_form(rng, 3, 3, 2);
      SurveyOptions opts;
      opts.samples = 100;
      opts.seed = 900 + k;
      SurveyReport r = rank_survey(f, GroupRep::symmetric(3, 3), opts);
      for (auto [rank, count] : r.histogram) {
        c.require(rank != -1, "survey sample failed");
        if (rank >= 0) c.require(rank >= 4, "rank below 4 observed");
      }
    }
  });

  run("AC10", 900, [](Check& c) {
    EdgeVerdict v = certify_h_pair(Partition({5, 2, 1}), Partition({4, 4}), 3);
    c.require(v.status == EdgeStatus::Certified, "pair not certified");
    c.require(v.dominance == Dominance::Incomparable, "dominance");
    c.require(export_dot({v}).find("\"5,2,1\" -> \"4,4\" [color=blue]") != std::string::npos, "DOT edge");
    PosetOptions po;
    HPoset P = build_poset(6, 3, po);
    for (const auto& e : P.verdicts) {
      if (e.status != EdgeStatus::Certified) continue;
      c.require(e.certificate.has_value(), "certified edge without certificate");
      if (!e.certificate) continue;
      VerifyReport rep = verify(h_difference(e.lambda, e.mu, e.n_used), *e.certificate);
      c.require(rep.residual <= 1e-7, "edge re-verification " + e.lambda.to_string() + " " + e.mu.to_string());
    }
  });

  run("AC11", 60, [](Check& c) {
    MatrixGroupData g = load_matrix_group(std::string(SYMSOS_DATA_DIR) + "/icosahedral.json");
    c.require(group_closure(g.group->generators()).size() == 120, "group order");
    GroupRep rep = GroupRep::from_group(g.group, 2, g.irreps);
    Eigen::MatrixXd S = invariant_gram(rep);
    Eigen::MatrixXd want(6, 6);
    want << 7, 0, 0, -1, 0, -1, 0, 4, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, -1, 0, 0, 7, 0, -1, 0, 0, 0, 0, 4, 0,
        -1, 0, 0, -1, 0, 7;
    want /= 5.0;
    c.require((S - want).cwiseAbs().maxCoeff() <= 1e-9, "invariant inner product");
    OrthogonalizedRep o = orthogonalize_rep(rep, S);
    Eigen::MatrixXd G = o.U * o.U.transpose();  // identity Gram in the orthonormal frame
    RealPoly f = gram_polynomial(G, rep.basis());
    RealPoly target = to_real(parse_poly(
        "3/4*x1^4 + 3/2*x1^2*x2^2 + 3/4*x2^4 + 3/2*x1^2*x3^2 + 3/2*x2^2*x3^2 + 3/4*x3^4", 3));
    c.require(max_coeff_diff(f, target) <= 1e-9, "identity Gram invariant");
  });

  return failures ? 1 : 0;
}
