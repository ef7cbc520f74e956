#include "symsos/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "symsos/symfunc.hpp"

namespace symsos {

// ---------------------------------------------------------------- binary

Eigen::MatrixXd binary_change_of_basis(int d) {
  if (d < 0) throw std::invalid_argument("binary_change_of_basis: negative degree");
  const int N = d + 1;
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(N, N);
  int col = 0;
  for (int j = 0; j < N - 1 - j; ++j, ++col) {
    T(j, col) = r;
    T(N - 1 - j, col) = r;
  }
  if (d % 2 == 0) T(d / 2, col++) = 1.0;
  for (int j = 0; j < N - 1 - j; ++j, ++col) {
    T(j, col) = r;
    T(N - 1 - j, col) = -r;
  }
  return T;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> binary_blocks(int d, const Eigen::MatrixXd& q,
                                                          double tol) {
  const int N = d + 1;
  if (q.rows() != N || q.cols() != N) throw std::invalid_argument("binary_blocks: wrong size");
  double scale = std::max(1.0, q.cwiseAbs().maxCoeff());
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (std::abs(q(i, j) - q(N - 1 - i, N - 1 - j)) > tol * scale)
        throw std::invalid_argument("binary_blocks: matrix is not flip invariant");
  Eigen::MatrixXd T = binary_change_of_basis(d);
  Eigen::MatrixXd B = T.transpose() * q * T;
  int h = d / 2 + 1;
  if (d % 2) h = (d + 1) / 2;
  return {B.topLeftCorner(h, h), B.bottomRightCorner(N - h, N - h)};
}

// ------------------------------------------------------------- quadratic

QuadraticAnalysis quadratic_analyze(const Rational& a, const Rational& b, int n) {
  if (n < 2) throw std::invalid_argument("quadratic_analyze: n must be at least 2");
  QuadraticAnalysis r;
  Rational lo = -a / Rational(n - 1);
  r.sos = lo <= b && b <= a;
  if (!r.sos) return r;
  r.upper_boundary = b == a;
  r.lower_boundary = b == lo;
  Rational l1 = a + Rational(n - 1) * b;  // on (1,...,1)
  Rational l2 = a - b;                    // multiplicity n-1
  r.rank = (l1 != 0 ? 1 : 0) + (l2 != 0 ? n - 1 : 0);
  return r;
}

SparsePoly quadratic_poly(const Rational& a, const Rational& b, int n) {
  SparsePoly f(n);
  for (int i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 2;
    f.add_term(e, a);
    for (int j = i + 1; j < n; ++j) {
      Exponent g(n, 0);
      g[i] = g[j] = 1;
      f.add_term(g, 2 * b);
    }
  }
  return f;
}

double quadratic_sos_ratio(double n) {
  if (n < 2) throw std::invalid_argument("quadratic_sos_ratio: n must be at least 2");
  const double pi = std::numbers::pi;
  return (pi / 4 + std::atan(1.0 / (n - 1))) / (2 * pi);
}

// --------------------------------------------------------------- quartic

namespace {

SparsePoly monomial_sum(const std::vector<std::vector<int>>& parts, const std::vector<Rational>& c,
                        int n) {
  SparsePoly f(n);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (c[i] != 0) f += basis_poly(SymBasis::m, Partition(parts[i]), n) * SparsePoly::constant(n, c[i]);
  return f;
}

std::vector<Rational> read_orbit_coeffs(const SparsePoly& f,
                                        const std::vector<std::vector<int>>& parts, int n,
                                        int degree, const char* what) {
  if (f.num_vars() != n) throw std::invalid_argument(std::string(what) + ": wrong variable count");
  if (!f.is_zero() && (f.degree() != degree || !f.is_homogeneous()))
    throw std::invalid_argument(std::string(what) + ": wrong degree");
  std::vector<Rational> c;
  for (const auto& p : parts) {
    Exponent e(n, 0);
    for (std::size_t i = 0; i < p.size(); ++i) e[i] = p[i];
    c.push_back(f.coefficient(e));
  }
  if (!(monomial_sum(parts, c, n) == f))
    throw std::invalid_argument(std::string(what) + ": polynomial is not symmetric");
  return c;
}

const std::vector<std::vector<int>> kQuarticParts = {{4}, {3, 1}, {2, 2}, {2, 1, 1}};
const std::vector<std::vector<int>> kSexticParts = {{6},       {5, 1},    {4, 2},   {4, 1, 1},
                                                    {3, 3},    {3, 2, 1}, {2, 2, 2}};

using RPoly = std::vector<Rational>;  // coefficient of x^i at index i

RPoly rmul(const RPoly& p, const RPoly& q) {
  RPoly r(p.size() + q.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

RPoly radd(RPoly p, const RPoly& q) {
  if (q.size() > p.size()) p.resize(q.size(), Rational(0));
  for (std::size_t i = 0; i < q.size(); ++i) p[i] += q[i];
  return p;
}

RPoly rneg(RPoly p) {
  for (auto& c : p) c = -c;
  return p;
}

struct ConicSystem {
  double A1[6], A2[6];  // x^2, xy, y^2, x, y, 1

  static void fill(double* A, const RationalMatrix& M) {
    A[0] = M[0][0].get_d();
    A[1] = 2 * M[0][1].get_d();
    A[2] = M[1][1].get_d();
    A[3] = 2 * M[0][2].get_d();
    A[4] = 2 * M[1][2].get_d();
    A[5] = M[2][2].get_d();
  }
  template <class T>
  static T ev(const double* A, T x, T y) {
    return A[0] * x * x + A[1] * x * y + A[2] * y * y + A[3] * x + A[4] * y + A[5];
  }
  template <class T>
  static T dx(const double* A, T x, T y) {
    return 2.0 * A[0] * x + A[1] * y + A[3];
  }
  template <class T>
  static T dy(const double* A, T x, T y) {
    return A[1] * x + 2.0 * A[2] * y + A[4];
  }

  void polish(std::complex<double>& x, std::complex<double>& y) const {
    using C = std::complex<double>;
    for (int it = 0; it < 50; ++it) {
      C f1 = ev(A1, x, y), f2 = ev(A2, x, y);
      C j11 = dx(A1, x, y), j12 = dy(A1, x, y), j21 = dx(A2, x, y), j22 = dy(A2, x, y);
      C det = j11 * j22 - j12 * j21;
      if (std::abs(det) < 1e-300) return;
      C sx = (f1 * j22 - f2 * j12) / det;
      C sy = (j11 * f2 - j21 * f1) / det;
      x -= sx;
      y -= sy;
      if (std::abs(sx) + std::abs(sy) <= 1e-15 * (1 + std::abs(x) + std::abs(y))) return;
    }
  }
};

}  // namespace

SparsePoly QuarticCoeffs::poly() const { return monomial_sum(kQuarticParts, {a, b, c, d}, 3); }

QuarticCoeffs QuarticCoeffs::from_poly(const SparsePoly& f) {
  auto c = read_orbit_coeffs(f, kQuarticParts, 3, 4, "quartic");
  return {c[0], c[1], c[2], c[3]};
}

const char* to_string(ConicKind k) {
  switch (k) {
    case ConicKind::Parabola: return "parabola";
    case ConicKind::DoubleLine: return "double line";
    case ConicKind::Hyperbola: return "hyperbola";
    case ConicKind::CrossingLines: return "crossing lines";
  }
  return "?";
}

int QuarticAnalysis::psd_vertex_count() const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(),
                                        [](const QuarticVertex& v) { return v.real && v.psd; }));
}

std::vector<Eigen::Vector2d> QuarticAnalysis::psd_vertices() const {
  std::vector<Eigen::Vector2d> out;
  for (const auto& v : vertices)
    if (v.real && v.psd) out.emplace_back(v.q12.real(), v.q16.real());
  return out;
}

std::pair<Eigen::Matrix2d, Eigen::Matrix2d> quartic_blocks(const QuarticCoeffs& c, double q12,
                                                           double q16) {
  double a = c.a.get_d(), b = c.b.get_d(), cc = c.c.get_d(), d = c.d.get_d();
  Eigen::Matrix2d K1, K2;
  K1 << a + 2 * q12, b + q16, b + q16, cc + d - 2 * q12 - 2 * q16;
  K2 << a - q12, b / 2 - q16, b / 2 - q16, cc - d / 2 - 2 * q12 + q16;
  return {K1, K2};
}

Eigen::MatrixXd quartic_full_block_matrix(const QuarticCoeffs& c, double q12, double q16) {
  auto [K1, K2] = quartic_blocks(c, q12, q16);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(6, 6);
  M.block<2, 2>(0, 0) = K1;
  M.block<2, 2>(2, 2) = K2;
  M.block<2, 2>(4, 4) = K2;
  return M;
}

int quartic_boundary_rank(const QuarticCoeffs& c, const Eigen::Vector2d& point, double tol,
                          double rank_tol) {
  Eigen::MatrixXd M = quartic_full_block_matrix(c, point(0), point(1));
  double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  if (min_eigenvalue(M) < -tol * scale)
    throw std::domain_error("quartic_boundary_rank: point is not in the spectrahedron");
  return numerical_rank(M, rank_tol);
}

namespace {

SdpProblem quartic_sdp(const QuarticCoeffs& c) {
  double a = c.a.get_d(), b = c.b.get_d(), cc = c.c.get_d(), d = c.d.get_d();
  SdpProblem p;
  p.num_params = 2;
  SdpBlock k1, k2;
  k1.constant = (Eigen::MatrixXd(2, 2) << a, b, b, cc + d).finished();
  k1.coeffs = {(Eigen::MatrixXd(2, 2) << 2, 0, 0, -2).finished(),
               (Eigen::MatrixXd(2, 2) << 0, 1, 1, -2).finished()};
  k2.constant = (Eigen::MatrixXd(2, 2) << a, b / 2, b / 2, cc - d / 2).finished();
  k2.coeffs = {(Eigen::MatrixXd(2, 2) << -1, 0, 0, -2).finished(),
               (Eigen::MatrixXd(2, 2) << 0, -1, -1, 1).finished()};
  p.blocks = {k1, k2};
  return p;
}

}  // namespace

QuarticAnalysis quartic_analyze(const QuarticCoeffs& c, const SdpOptions& sdp) {
  QuarticAnalysis r;
  const Rational &a = c.a, &b = c.b, &cc = c.c, &d = c.d;
  r.a_nonneg = a >= 0;
  r.a_plus_c_nonneg = a + cc >= 0;
  r.sum_nonneg = a + 2 * b + cc + d >= 0;

  Rational h(1, 2), q(1, 4);
  r.k1.matrix = {{-4, -2, -a + cc + d}, {-2, -1, -a - b}, {-a + cc + d, -a - b, a * cc + a * d - b * b}};
  r.k2.matrix = {{2, -h, -a - h * cc + q * d},
                 {-h, -1, h * a + h * b},
                 {-a - h * cc + q * d, h * a + h * b, -q * b * b + a * cc - h * a * d}};
  auto det3 = [](const RationalMatrix& M) {
    return Rational(M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                    M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                    M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]));
  };
  auto minor2 = [](const RationalMatrix& M) { return Rational(M[0][0] * M[1][1] - M[0][1] * M[1][0]); };
  if (minor2(r.k1.matrix) == 0)
    r.k1.kind = det3(r.k1.matrix) == 0 ? ConicKind::DoubleLine : ConicKind::Parabola;
  else
    r.k1.kind = det3(r.k1.matrix) == 0 ? ConicKind::CrossingLines : ConicKind::Hyperbola;
  if (minor2(r.k2.matrix) == 0)
    r.k2.kind = det3(r.k2.matrix) == 0 ? ConicKind::DoubleLine : ConicKind::Parabola;
  else
    r.k2.kind = det3(r.k2.matrix) == 0 ? ConicKind::CrossingLines : ConicKind::Hyperbola;
  {
    // the quadratic part of both conics at (1, -2)
    auto at_inf = [](const RationalMatrix& M) {
      return Rational(M[0][0] - 4 * M[0][1] + 4 * M[1][1]);
    };
    r.infinity_point_ok = at_inf(r.k1.matrix) == 0 && at_inf(r.k2.matrix) == 0;
  }

  SdpSolution sol = solve(quartic_sdp(c), sdp);
  r.sos = sol.status;
  if (sol.status == SdpStatus::Feasible || sol.status == SdpStatus::Optimal)
    r.feasible_point = sol.params;

  if (r.k1.kind == ConicKind::DoubleLine) {
    r.ray_origin = Eigen::Vector2d(Rational(-a / 2).get_d(), Rational((a + cc + d) / 2).get_d());
  } else {
    // p1 - p2 is linear in q16: q16 = N(q12) / u(q12)
    RPoly N = {Rational(a * d / 2 - b * b / 4), Rational(cc + d / 2), Rational(-2)};
    RPoly u = {Rational(a + b), Rational(1)};
    Rational L1 = -2 * a - cc + d / 2, L2 = a + b, K = a * cc - a * d / 2 - b * b / 4;
    RPoly cubic = radd(radd(rmul(rmul(u, u), RPoly{K, L1, Rational(2)}),
                            rmul(rmul(RPoly{L2, Rational(-1)}, N), u)),
                       rneg(rmul(N, N)));
    while (!cubic.empty() && cubic.back() == 0) cubic.pop_back();
    int deg = static_cast<int>(cubic.size()) - 1;
    ConicSystem sys;
    ConicSystem::fill(sys.A1, r.k1.matrix);
    ConicSystem::fill(sys.A2, r.k2.matrix);
    if (deg >= 1) {
      Eigen::MatrixXd C = Eigen::MatrixXd::Zero(deg, deg);
      double lead = cubic[deg].get_d();
      for (int i = 1; i < deg; ++i) C(i, i - 1) = 1;
      for (int i = 0; i < deg; ++i) C(i, deg - 1) = -cubic[i].get_d() / lead;
      Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
      double ad = a.get_d(), bd = b.get_d();
      for (int i = 0; i < deg; ++i) {
        std::complex<double> x = es.eigenvalues()(i);
        std::complex<double> uu = x + ad + bd;
        if (std::abs(uu) < 1e-12 * (1 + std::abs(x))) continue;
        std::complex<double> y =
            (-2.0 * x * x + Rational(cc + d / 2).get_d() * x + Rational(a * d / 2 - b * b / 4).get_d()) / uu;
        sys.polish(x, y);
        QuarticVertex v;
        double sc = 1 + std::abs(x) + std::abs(y);
        v.real = std::abs(x.imag()) <= 1e-9 * sc && std::abs(y.imag()) <= 1e-9 * sc;
        if (v.real) {
          x = x.real();
          y = y.real();
          Eigen::MatrixXd M = quartic_full_block_matrix(c, x.real(), y.real());
          double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
          v.psd = min_eigenvalue(M) >= -1e-8 * scale;
          v.rank = numerical_rank(M, 1e-7);
        }
        v.q12 = x;
        v.q16 = y;
        r.vertices.push_back(v);
      }
    }
  }

  // lattice witness search
  if (sol.status == SdpStatus::Infeasible) {
    SparsePoly f = c.poly();
    std::optional<Rational> best;
    int best_nnz = 0;
    for (int x1 = -2; x1 <= 2; ++x1)
      for (int x2 = -2; x2 <= 2; ++x2)
        for (int x3 = -2; x3 <= 2; ++x3) {
          int first = x1 != 0 ? x1 : (x2 != 0 ? x2 : x3);
          if (first <= 0) continue;
          Rational v = eval(f, {Rational(x1), Rational(x2), Rational(x3)});
          int n2 = x1 * x1 + x2 * x2 + x3 * x3;
          Rational ratio = v / Rational(n2 * n2);
          int nnz = (x1 != 0) + (x2 != 0) + (x3 != 0);
          if (!best || ratio < *best || (ratio == *best && nnz > best_nnz)) {
            best = ratio;
            best_nnz = nnz;
            r.witness = std::array<int, 3>{x1, x2, x3};
            r.witness_value = v;
          }
        }
    if (!best || *best >= 0) r.witness.reset();
  }
  return r;
}

std::optional<RayHit> quartic_ray_hit(const QuarticCoeffs& c, const Eigen::Vector2d& interior,
                                      const Eigen::Vector2d& dir) {
  auto [A1, A2] = quartic_blocks(c, interior(0), interior(1));
  auto [Z1, Z2] = quartic_blocks(c, 0, 0);
  auto [D1, D2] = quartic_blocks(c, dir(0), dir(1));
  Eigen::Matrix2d B1 = D1 - Z1, B2 = D2 - Z2;
  auto first_root = [](const Eigen::Matrix2d& A, const Eigen::Matrix2d& B) {
    // det(A + tB) = detA + t (A00 B11 + A11 B00 - 2 A01 B01) + t^2 detB
    double c0 = A.determinant();
    double c1 = A(0, 0) * B(1, 1) + A(1, 1) * B(0, 0) - 2 * A(0, 1) * B(0, 1);
    double c2 = B.determinant();
    double best = std::numeric_limits<double>::infinity();
    auto take = [&](double t) {
      if (t > 0 && t < best) best = t;
    };
    double s = std::max({std::abs(c0), std::abs(c1), std::abs(c2)});
    if (std::abs(c2) <= 1e-14 * s) {
      if (c1 != 0) take(-c0 / c1);
    } else {
      double disc = c1 * c1 - 4 * c2 * c0;
      if (disc >= 0) {
        double sq = std::sqrt(disc);
        double qq = -0.5 * (c1 + (c1 >= 0 ? sq : -sq));
        if (qq != 0) {
          take(qq / c2);
          take(c0 / qq);
        }
      }
    }
    return best;
  };
  double t1 = first_root(A1, B1), t2 = first_root(A2, B2);
  double t = std::min(t1, t2);
  if (!std::isfinite(t)) return std::nullopt;
  RayHit hit;
  hit.t = t;
  hit.point = interior + t * dir;
  if (std::abs(t1 - t2) <= 1e-12 * t)
    hit.which = 3;
  else
    hit.which = t1 < t2 ? 1 : 2;
  return hit;
}

QuarticFromBlocks quartic_from_blocks(const std::array<Rational, 3>& k1,
                                      const std::array<Rational, 3>& k2) {
  // k = (M00, M01, M11)
  QuarticFromBlocks out;
  out.q12 = (k1[0] - k2[0]) / 3;
  out.coeffs.a = k2[0] + out.q12;
  out.coeffs.b = (k1[1] + k2[1]) * Rational(2, 3);
  out.q16 = k1[1] - out.coeffs.b;
  Rational cpd = k1[2] + 2 * out.q12 + 2 * out.q16;
  Rational cmh = k2[2] + 2 * out.q12 - out.q16;
  out.coeffs.d = (cpd - cmh) * Rational(2, 3);
  out.coeffs.c = cpd - out.coeffs.d;
  return out;
}

QuarticFromBlocks random_sos_quartic(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  auto pd_block = [&]() {
    // L L^T + small shift, L lower triangular with rational entries
    Rational l00(num(rng), den(rng)), l10(num(rng), den(rng)), l11(num(rng), den(rng));
    Rational s(1, den(rng) * 4);
    l00.canonicalize();
    l10.canonicalize();
    l11.canonicalize();
    if (l00 == 0) l00 = 1;
    if (l11 == 0) l11 = 1;
    return std::array<Rational, 3>{l00 * l00 + s, l00 * l10, l10 * l10 + l11 * l11 + s};
  };
  auto k1 = pd_block();
  auto k2 = pd_block();
  return quartic_from_blocks(k1, k2);
}

// ---------------------------------------------------------------- sextic

SparsePoly SexticCoeffs::poly() const {
  return monomial_sum(kSexticParts, std::vector<Rational>(a.begin(), a.end()), 3);
}

SexticCoeffs SexticCoeffs::from_poly(const SparsePoly& f) {
  auto c = read_orbit_coeffs(f, kSexticParts, 3, 6, "sextic");
  SexticCoeffs s;
  std::copy(c.begin(), c.end(), s.a.begin());
  return s;
}

SexticBlocks sextic_blocks(const SexticCoeffs& c, const std::array<double, 6>& free) {
  double a1 = c.a[0].get_d(), a2 = c.a[1].get_d(), a3 = c.a[2].get_d(), a4 = c.a[3].get_d(),
         a5 = c.a[4].get_d(), a6 = c.a[5].get_d(), a7 = c.a[6].get_d();
  auto [q12, q16, q18, q110, q49, q410] = free;
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
  double alpha = a3 + a4 / 2 + a5 / 2 + a6 - q12 - 2 * q16 - 2 * q18 - q110 + q49 - 2 * q410;
  double beta1 = a3 + a4 / 2 - a5 / 4 - a6 / 2 + q12 / 2 - 2 * q16 + q18 - q110 - q49 / 2 + q410;
  double beta2 = a3 - a4 / 2 + a5 / 4 - a6 / 2 - q12 / 2 - 2 * q16 + q18 + q110 + q49 / 2 + q410;
  SexticBlocks B;
  double t12 = r2 * (a2 / 2 + q16 + q18);
  B.trivial << a1 + 2 * q12, t12, r3 * q110,
               t12, alpha, r6 * q410,
               r3 * q110, r6 * q410, a7 - 6 * q49;
  double s12 = r2 / 2 * (a2 - q16 - q18), s13 = r6 / 2 * (q16 - q18),
         s23 = r3 / 2 * (a5 / 2 - q12 - q49);
  B.standard << a1 - q12, s12, s13,
                s12, beta1, s23,
                s13, s23, beta2;
  B.alternating = a3 - a4 / 2 - a5 / 2 + a6 + q12 - 2 * q16 - 2 * q18 + q110 - q49 - 2 * q410;
  return B;
}

SexticObstructions sextic_rank3_obstructions(const SexticCoeffs& c) {
  const Rational &a1 = c.a[0], &a2 = c.a[1], &a3 = c.a[2], &a4 = c.a[3], &a5 = c.a[4],
                 &a6 = c.a[5], &a7 = c.a[6];
  SexticObstructions o;
  o.case_a = a5 - 2 * a1 - 2 * a3 + 2 * a2;
  Rational h(1, 2), q(1, 4);
  Rational v = 0;
  v += -10 * a1 * a2 * a2;
  v += -5 * q * a2 * a2 * a2;
  v += 10 * a1 * a2 * a3;
  v += -5 * h * a2 * a2 * a3;
  v += -4 * a1 * a3 * a3;
  v += 5 * h * a2 * a2 * a4;
  v += -3 * a2 * a3 * a4;
  v += 3 * q * a2 * a4 * a4;
  v += -h * a3 * a4 * a4;
  v += 12 * a1 * a2 * a5;
  v += q * a2 * a2 * a5;
  v += -6 * a1 * a3 * a5;
  v += 3 * a2 * a3 * a5;
  v += -2 * a2 * a4 * a5;
  v += a3 * a4 * a5;
  v += -q * a4 * a4 * a5;
  v += -3 * a1 * a5 * a5;
  v += 5 * q * a2 * a5 * a5;
  v += -h * a3 * a5 * a5;
  v += h * a4 * a5 * a5;
  v += -q * a5 * a5 * a5;
  v += -2 * a1 * a2 * a6;
  v += a2 * a2 * a6;
  v += 4 * a1 * a3 * a6;
  v += a2 * a4 * a6;
  v += -a2 * a5 * a6;
  v += -a1 * a6 * a6;
  v += -3 * a1 * a2 * a7;
  v += -a2 * a2 * a7;
  v += 2 * a1 * a3 * a7;
  v += a1 * a5 * a7;
  o.case_b = v;
  return o;
}

}  // namespace symsos
