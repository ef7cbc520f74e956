// Command-line front end.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "symsos/certify.hpp"
#include "symsos/families.hpp"
#include "symsos/hposet.hpp"
#include "symsos/repsn.hpp"
#include "symsos/survey.hpp"
#include "symsos/symfunc.hpp"

using namespace symsos;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int max_variable(const std::string& text) {
  static const std::regex var("x([0-9]+)");
  int n = 0;
  for (std::sregex_iterator it(text.begin(), text.end(), var), end; it != end; ++it)
    n = std::max(n, std::stoi((*it)[1]));
  return n;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s, std::size_t expect) {
  std::vector<Rational> v;
  for (const auto& t : split(s, ',')) v.push_back(parse_rational(t));
  if (expect && v.size() != expect)
    throw UsageError("expected " + std::to_string(expect) + " comma-separated values");
  return v;
}

// "s3", "symmetric", or a group JSON file.
struct GroupChoice {
  std::optional<MatrixGroupData> matrix;
  int n = 0;  // variables of a symmetric group, 0 to infer
};

GroupChoice parse_group(const std::string& spec) {
  GroupChoice g;
  if (spec.empty() || spec == "symmetric") return g;
  static const std::regex sym("[sS]([0-9]+)");
  std::smatch m;
  if (std::regex_match(spec, m, sym)) {
    g.n = std::stoi(m[1]);
    return g;
  }
  g.matrix = load_matrix_group(spec);
  g.n = g.matrix->group->dim();
  return g;
}

GroupRep make_rep(const GroupChoice& g, int n, int d) {
  if (g.matrix) return GroupRep::from_group(g.matrix->group, d, g.matrix->irreps);
  return GroupRep::symmetric(n, d);
}

SparsePoly load_poly(const std::string& file, const std::string& expr, int n_hint, int& n) {
  if (file.empty() == expr.empty()) throw UsageError("give exactly one of --poly or --expr");
  std::string text = file.empty() ? expr : read_file(file);
  for (char& c : text)
    if (c == '\n' || c == '\r' || c == '\t') c = ' ';
  n = n_hint > 0 ? n_hint : std::max(1, max_variable(text));
  return parse_poly(text, n);
}

ojson matrix_json(const Eigen::MatrixXd& M) {
  ojson rows = ojson::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    ojson r = ojson::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) r.push_back(M(i, j));
    rows.push_back(r);
  }
  return rows;
}

std::string exponent_string(const Exponent& e) {
  return render_poly(SparsePoly::monomial(e));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry-reduced sums of squares"};
  app.require_subcommand(1);
  bool json_out = false;

  // multiplicity
  int mult_n = 3, mult_d = 2;
  auto* mult = app.add_subcommand("multiplicity", "isotypic multiplicities of R[x]_d under S_n");
  mult->add_option("--n", mult_n)->required();
  mult->add_option("--d", mult_d)->required();
  mult->add_flag("--json", json_out);

  // basis
  int basis_n = 3, basis_d = 2;
  std::string basis_group;
  auto* basis = app.add_subcommand("basis", "symmetry adapted basis");
  basis->add_option("--n", basis_n);
  basis->add_option("--d", basis_d)->required();
  basis->add_option("--group", basis_group, "s<n> or a group JSON file");
  basis->add_flag("--json", json_out);

  // certify
  std::string cert_poly, cert_expr, cert_group, cert_out;
  int cert_n = 0, cert_vs = 0;
  unsigned long long cert_seed = 0;
  auto* cert = app.add_subcommand("certify", "SOS certificate for an invariant form");
  cert->add_option("--poly", cert_poly, "file holding the polynomial");
  cert->add_option("--expr", cert_expr, "polynomial text");
  cert->add_option("--n", cert_n, "number of variables");
  cert->add_option("--group", cert_group, "s<n> or a group JSON file");
  cert->add_option("--vertex-search", cert_vs, "extra random objectives");
  cert->add_option("--seed", cert_seed);
  cert->add_option("--out", cert_out, "write the certificate here");
  cert->add_flag("--json", json_out);

  // verify
  std::string ver_cert, ver_poly, ver_expr;
  double ver_tol = 1e-7;
  auto* ver = app.add_subcommand("verify", "re-check a certificate");
  ver->add_option("--cert", ver_cert)->required();
  ver->add_option("--poly", ver_poly, "compare against this polynomial instead of the stored one");
  ver->add_option("--expr", ver_expr);
  ver->add_option("--tol", ver_tol);
  ver->add_flag("--json", json_out);

  // quartic
  std::string quart_coeffs;
  auto* quart = app.add_subcommand("quartic", "symmetric ternary quartic analysis");
  quart->add_option("--coeffs", quart_coeffs, "a,b,c,d")->required();
  quart->add_flag("--json", json_out);

  // quadratic
  std::string quad_a, quad_b;
  int quad_n = 2;
  auto* quad = app.add_subcommand("quadratic", "a sum x_i^2 + 2b sum_{i<j} x_i x_j");
  quad->add_option("--a", quad_a)->required();
  quad->add_option("--b", quad_b)->required();
  quad->add_option("--n", quad_n)->required();
  quad->add_flag("--json", json_out);

  // sextic
  std::string sext_coeffs, sext_params;
  auto* sext = app.add_subcommand("sextic", "symmetric ternary sextic blocks and obstructions");
  sext->add_option("--coeffs", sext_coeffs, "a1,...,a7")->required();
  sext->add_option("--params", sext_params, "q12,q16,q18,q110,q49,q410");
  sext->add_flag("--json", json_out);

  // hpair
  std::string hp_lambda, hp_mu, hp_dot;
  int hp_n = 3;
  auto* hpair = app.add_subcommand("hpair", "test H_mu >= H_lambda on the orthant");
  hpair->add_option("--lambda", hp_lambda)->required();
  hpair->add_option("--mu", hp_mu)->required();
  hpair->add_option("--n", hp_n);
  hpair->add_option("--dot", hp_dot);
  hpair->add_flag("--json", json_out);

  // hposet
  int hpo_weight = 4, hpo_n = 3, hpo_jobs = 1, hpo_max_pairs = 0, hpo_cap = 0, hpo_parts = -1;
  std::string hpo_dot, hpo_json;
  bool hpo_full = false;
  auto* hposet = app.add_subcommand("hposet", "poset of certified H inequalities");
  hposet->add_option("--weight", hpo_weight)->required();
  hposet->add_option("--n", hpo_n);
  hposet->add_option("--jobs", hpo_jobs);
  hposet->add_option("--max-pairs", hpo_max_pairs);
  hposet->add_option("--degree-cap", hpo_cap);
  hposet->add_option("--max-parts", hpo_parts);
  hposet->add_option("--dot", hpo_dot);
  hposet->add_option("--json", hpo_json);
  hposet->add_flag("--all-edges", hpo_full, "draw every certified edge, not only the reduction");

  // survey
  std::string sv_poly, sv_expr, sv_csv, sv_json, sv_group;
  int sv_samples = 100, sv_jobs = 1, sv_n = 0;
  unsigned long long sv_seed = 0;
  auto* survey = app.add_subcommand("survey", "rank distribution under random objectives");
  survey->add_option("--poly", sv_poly);
  survey->add_option("--expr", sv_expr);
  survey->add_option("--n", sv_n);
  survey->add_option("--group", sv_group);
  survey->add_option("--samples", sv_samples);
  survey->add_option("--seed", sv_seed);
  survey->add_option("--jobs", sv_jobs);
  survey->add_option("--csv", sv_csv);
  survey->add_option("--json", sv_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*mult) {
      if (mult_n < 1 || mult_d < 0) throw UsageError("need n >= 1 and d >= 0");
      ojson rows = ojson::array();
      for (const auto& lam : partitions_of(mult_n)) {
        auto m = multiplicity(lam, mult_d);
        if (json_out)
          rows.push_back({{"partition", lam.to_string()}, {"dim", irrep_dimension(lam)}, {"multiplicity", m}});
        else
          std::cout << "(" << lam.to_string() << ")\t" << m << "\n";
      }
      if (json_out) std::cout << rows.dump(2) << "\n";
      return kOk;
    }

    if (*basis) {
      GroupChoice g = parse_group(basis_group);
      int n = g.n ? g.n : basis_n;
      GroupRep rep = orthogonalized(make_rep(g, n, basis_d));
      SymAdaptedBasis sab = symmetry_adapted_basis(rep);
      if (json_out) {
        ojson j;
        j["schema"] = 1;
        ojson b = ojson::array();
        for (const auto& e : rep.basis()) b.push_back(exponent_string(e));
        j["basis"] = b;
        ojson lay = ojson::array();
        for (const auto& e : sab.layout.entries)
          lay.push_back({{"label", e.label}, {"m", e.m}, {"n", e.n}, {"offset", e.offset}});
        j["layout"] = lay;
        j["T"] = matrix_json(sab.T);
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& e : sab.layout.entries)
          std::cout << e.label << "\tm=" << e.m << "\tn=" << e.n << "\n";
        for (int c = 0; c < sab.layout.N; ++c) {
          RealPoly p = prune(sab.basis_polys[c], 1e-12);
          std::cout << "v" << c + 1 << " = " << render_poly(p) << "\n";
        }
      }
      return kOk;
    }

    if (*cert) {
      GroupChoice g = parse_group(cert_group);
      int n = 0;
      SparsePoly f = load_poly(cert_poly, cert_expr, cert_n ? cert_n : g.n, n);
      CertifyOptions opts;
      opts.vertex_search = cert_vs;
      opts.seed = cert_seed;
      CertifyResult r;
      if (f.is_zero())
        r = certify(f, make_rep(g, n, 0), opts);
      else {
        if (!f.is_homogeneous() || f.degree() % 2)
          throw UsageError("polynomial must be homogeneous of even degree");
        r = certify(f, make_rep(g, n, f.degree() / 2), opts);
      }
      std::cerr << "status: " << to_string(r.status);
      if (!r.message.empty()) std::cerr << " (" << r.message << ")";
      std::cerr << "\n";
      if (r.status == CertifyStatus::Feasible && r.certificate) {
        std::string text = certificate_to_json(*r.certificate);
        if (!cert_out.empty()) write_file(cert_out, text + "\n");
        if (json_out || cert_out.empty()) {
          std::cout << text << "\n";
        } else {
          auto rp = rank_profile(*r.certificate);
          std::cout << "squares " << r.certificate->squares.size() << "\ttotal rank " << rp.total
                    << "\tresidual " << r.certificate->residual << "\n";
        }
        return kOk;
      }
      return r.status == CertifyStatus::Infeasible ? kNo : kUnknown;
    }

    if (*ver) {
      SosCertificate c = certificate_from_json(read_file(ver_cert));
      SparsePoly f = c.f;
      if (!ver_poly.empty() || !ver_expr.empty()) {
        int n = 0;
        f = load_poly(ver_poly, ver_expr, c.n, n);
      }
      VerifyReport rep = verify(f, c);
      bool ok = rep.ok(ver_tol);
      if (json_out) {
        ojson j{{"ok", ok},
                {"residual", rep.residual},
                {"invariance_defect", rep.invariance_defect},
                {"min_block_eig", rep.min_block_eig},
                {"square_count_ok", rep.square_count_ok}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (ok ? "valid" : "invalid") << "\tresidual " << rep.residual
                  << "\tinvariance " << rep.invariance_defect << "\tmin block eig "
                  << rep.min_block_eig << "\n";
      }
      return ok ? kOk : kNo;
    }

    if (*quart) {
      auto v = parse_rationals(quart_coeffs, 4);
      QuarticCoeffs c{v[0], v[1], v[2], v[3]};
      QuarticAnalysis r = quartic_analyze(c);
      bool sos = r.sos == SdpStatus::Feasible || r.sos == SdpStatus::Optimal;
      if (json_out) {
        ojson j;
        j["coeffs"] = {to_string(c.a), to_string(c.b), to_string(c.c), to_string(c.d)};
        j["necessary"] = {{"a>=0", r.a_nonneg}, {"a+c>=0", r.a_plus_c_nonneg}, {"a+2b+c+d>=0", r.sum_nonneg}};
        j["k1"] = to_string(r.k1.kind);
        j["k2"] = to_string(r.k2.kind);
        j["sos"] = to_string(r.sos);
        ojson vs = ojson::array();
        for (const auto& x : r.vertices)
          vs.push_back({{"q12", {x.q12.real(), x.q12.imag()}},
                        {"q16", {x.q16.real(), x.q16.imag()}},
                        {"real", x.real},
                        {"psd", x.psd},
                        {"rank", x.rank}});
        j["vertices"] = vs;
        if (r.ray_origin) j["ray_origin"] = {(*r.ray_origin)(0), (*r.ray_origin)(1)};
        if (sos) j["feasible_point"] = {r.feasible_point(0), r.feasible_point(1)};
        if (r.witness) {
          j["witness"] = *r.witness;
          j["witness_value"] = to_string(r.witness_value);
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "a >= 0: " << (r.a_nonneg ? "yes" : "no") << "\n"
                  << "a + c >= 0: " << (r.a_plus_c_nonneg ? "yes" : "no") << "\n"
                  << "a + 2b + c + d >= 0: " << (r.sum_nonneg ? "yes" : "no") << "\n"
                  << "K1: " << to_string(r.k1.kind) << "\tK2: " << to_string(r.k2.kind) << "\n"
                  << "SOS: " << to_string(r.sos) << "\n";
        for (const auto& x : r.vertices) {
          if (!x.real) {
            std::cout << "vertex (complex) q12=" << x.q12 << " q16=" << x.q16 << "\n";
            continue;
          }
          std::cout << "vertex q12=" << x.q12.real() << " q16=" << x.q16.real()
                    << (x.psd ? " PSD" : " not PSD") << " rank " << x.rank << "\n";
        }
        if (r.ray_origin)
          std::cout << "K1 is a ray from (" << (*r.ray_origin)(0) << ", " << (*r.ray_origin)(1)
                    << ") in direction (1, -2)\n";
        if (r.witness)
          std::cout << "witness f(" << (*r.witness)[0] << "," << (*r.witness)[1] << ","
                    << (*r.witness)[2] << ") = " << to_string(r.witness_value) << "\n";
      }
      if (sos) return kOk;
      return r.sos == SdpStatus::Infeasible ? kNo : kUnknown;
    }

    if (*quad) {
      Rational a = parse_rational(quad_a), b = parse_rational(quad_b);
      QuadraticAnalysis r = quadratic_analyze(a, b, quad_n);
      if (json_out) {
        ojson j{{"sos", r.sos},
                {"rank", r.rank},
                {"upper_boundary", r.upper_boundary},
                {"lower_boundary", r.lower_boundary},
                {"sos_ratio", quadratic_sos_ratio(quad_n)}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (r.sos ? "SOS" : "not SOS");
        if (r.sos) std::cout << "\trank " << r.rank;
        if (r.upper_boundary) std::cout << "\tb = a";
        if (r.lower_boundary) std::cout << "\tb = -a/(n-1)";
        std::cout << "\n";
      }
      return r.sos ? kOk : kNo;
    }

    if (*sext) {
      auto v = parse_rationals(sext_coeffs, 7);
      SexticCoeffs c;
      std::copy(v.begin(), v.end(), c.a.begin());
      SexticObstructions o = sextic_rank3_obstructions(c);
      ojson j;
      j["case_a"] = to_string(o.case_a);
      j["case_b"] = to_string(o.case_b);
      std::optional<SexticBlocks> B;
      if (!sext_params.empty()) {
        auto q = split(sext_params, ',');
        if (q.size() != 6) throw UsageError("--params needs 6 values");
        std::array<double, 6> p;
        for (int i = 0; i < 6; ++i) p[i] = std::stod(q[i]);
        B = sextic_blocks(c, p);
        j["trivial"] = matrix_json(B->trivial);
        j["standard"] = matrix_json(B->standard);
        j["alternating"] = B->alternating;
      }
      if (json_out) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "case (a) residual: " << to_string(o.case_a) << "\n"
                  << "case (b) residual: " << to_string(o.case_b) << "\n";
        if (B)
          std::cout << "trivial block:\n" << B->trivial << "\nstandard block:\n" << B->standard
                    << "\nalternating block: " << B->alternating << "\n";
      }
      return kOk;
    }

    if (*hpair) {
      Partition lam = Partition::parse(hp_lambda), mu = Partition::parse(hp_mu);
      if (lam.weight() != mu.weight()) throw UsageError("partitions differ in weight");
      EdgeVerdict v = certify_h_pair(lam, mu, hp_n);
      if (!hp_dot.empty()) write_file(hp_dot, export_dot({v}));
      if (json_out) {
        std::cout << verdicts_json({v}) << "\n";
      } else {
        std::cout << "H_" << mu.to_string() << " >= H_" << lam.to_string() << " (n=" << hp_n
                  << "): " << to_string(v.status) << "\tdominance " << to_string(v.dominance) << "\n";
        if (v.certificate)
          std::cout << "squares " << v.certificate->squares.size() << "\tresidual " << v.residual << "\n";
        if (v.point) {
          std::cout << "point (";
          for (std::size_t i = 0; i < v.point->size(); ++i)
            std::cout << (i ? "," : "") << to_string((*v.point)[i]);
          std::cout << ") value " << to_string(v.point_value) << "\n";
        }
      }
      switch (v.status) {
        case EdgeStatus::Certified: return kOk;
        case EdgeStatus::RefutedByPoint: return kNo;
        case EdgeStatus::Unknown: return kUnknown;
      }
    }

    if (*hposet) {
      PosetOptions po;
      po.jobs = hpo_jobs;
      po.max_pairs = hpo_max_pairs;
      po.max_parts = hpo_parts;
      po.pair.degree_cap = hpo_cap;
      HPoset P = build_poset(hpo_weight, hpo_n, po);
      std::vector<EdgeVerdict> drawn;
      if (hpo_full) {
        drawn = P.verdicts;
      } else {
        for (std::size_t k : P.hasse) drawn.push_back(P.verdicts[k]);
      }
      if (!hpo_dot.empty()) write_file(hpo_dot, export_dot(drawn));
      if (!hpo_json.empty()) write_file(hpo_json, verdicts_json(P.verdicts) + "\n");
      int certified = 0, refuted = 0, unknown = 0;
      for (const auto& v : P.verdicts) {
        if (v.status == EdgeStatus::Certified) ++certified;
        if (v.status == EdgeStatus::RefutedByPoint) ++refuted;
        if (v.status == EdgeStatus::Unknown) ++unknown;
      }
      std::cout << "pairs " << P.verdicts.size() << "\tcertified " << certified << "\trefuted "
                << refuted << "\tunknown " << unknown << "\thasse edges " << P.hasse.size() << "\n";
      for (std::size_t k : P.hasse) {
        const auto& v = P.verdicts[k];
        std::cout << v.lambda.to_string() << " -> " << v.mu.to_string()
                  << (v.dominance == Dominance::Incomparable ? "\tblue" : "\tblack") << "\n";
      }
      return kOk;
    }

    if (*survey) {
      GroupChoice g = parse_group(sv_group);
      int n = 0;
      SparsePoly f = load_poly(sv_poly, sv_expr, sv_n ? sv_n : g.n, n);
      if (f.is_zero() || !f.is_homogeneous() || f.degree() % 2)
        throw UsageError("polynomial must be nonzero, homogeneous, of even degree");
      SurveyOptions so;
      so.samples = sv_samples;
      so.seed = sv_seed;
      so.jobs = sv_jobs;
      SurveyReport r;
      try {
        r = rank_survey(f, make_rep(g, n, f.degree() / 2), so);
      } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kNo;
      }
      if (!sv_csv.empty()) write_file(sv_csv, histogram_csv(r));
      if (!sv_json.empty()) write_file(sv_json, survey_json(r) + "\n");
      std::cout << histogram_csv(r);
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnknown;
  }
  return kUsage;
}
