// Closed-form analyzers for binary forms, symmetric quadratics, and
// symmetric ternary quartics and sextics.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "symsos/polycore.hpp"
#include "symsos/sdpcore.hpp"

namespace symsos {

// ---- binary forms of degree 2d

// Columns: (e_j + e_{N-1-j})/sqrt2 for the trivial part (e_mid alone when d is
// even), then (e_j - e_{N-1-j})/sqrt2 for the alternating part.
Eigen::MatrixXd binary_change_of_basis(int d);
// Blocks T^T q T; q must be invariant under the antidiagonal flip.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> binary_blocks(int d, const Eigen::MatrixXd& q,
                                                          double tol = 1e-12);

// ---- symmetric quadratics a sum x_i^2 + 2b sum_{i<j} x_i x_j

struct QuadraticAnalysis {
  bool sos = false;
  int rank = -1;  // -1 when not SOS
  bool upper_boundary = false;  // b = a
  bool lower_boundary = false;  // b = -a/(n-1)
};
QuadraticAnalysis quadratic_analyze(const Rational& a, const Rational& b, int n);
SparsePoly quadratic_poly(const Rational& a, const Rational& b, int n);
double quadratic_sos_ratio(double n);

// ---- symmetric ternary quartics

struct QuarticCoeffs {
  Rational a, b, c, d;
  SparsePoly poly() const;
  static QuarticCoeffs from_poly(const SparsePoly& f);
};

enum class ConicKind { Parabola, DoubleLine, Hyperbola, CrossingLines };
const char* to_string(ConicKind k);

struct ConicClass {
  ConicKind kind = ConicKind::Parabola;
  RationalMatrix matrix;  // 3x3 in (q12, q16, 1)
};

struct QuarticVertex {
  std::complex<double> q12, q16;
  bool real = false;
  bool psd = false;
  int rank = -1;  // of the 6x6 matrix, real vertices only
};

struct QuarticAnalysis {
  bool a_nonneg = false;
  bool a_plus_c_nonneg = false;
  bool sum_nonneg = false;  // a + 2b + c + d >= 0
  ConicClass k1, k2;
  bool infinity_point_ok = false;  // [1:-2:0] lies on both conics
  std::vector<QuarticVertex> vertices;
  // Double-line case: the trivial block spectrahedron is a ray.
  std::optional<Eigen::Vector2d> ray_origin;
  Eigen::Vector2d ray_direction{1.0, -2.0};
  SdpStatus sos = SdpStatus::Indeterminate;
  Eigen::Vector2d feasible_point = Eigen::Vector2d::Zero();
  // Point of [-2,2]^3 minimizing f/|x|^4 when that ratio is negative.
  std::optional<std::array<int, 3>> witness;
  Rational witness_value;

  bool necessary_ok() const { return a_nonneg && a_plus_c_nonneg && sum_nonneg; }
  int psd_vertex_count() const;
  std::vector<Eigen::Vector2d> psd_vertices() const;
};

std::pair<Eigen::Matrix2d, Eigen::Matrix2d> quartic_blocks(const QuarticCoeffs& c, double q12,
                                                           double q16);
// diag(K1, K2, K2)
Eigen::MatrixXd quartic_full_block_matrix(const QuarticCoeffs& c, double q12, double q16);
// Numerical rank of the 6x6 matrix; throws domain_error at infeasible points.
int quartic_boundary_rank(const QuarticCoeffs& c, const Eigen::Vector2d& point,
                          double tol = 1e-8, double rank_tol = 1e-7);
QuarticAnalysis quartic_analyze(const QuarticCoeffs& c, const SdpOptions& sdp = {});

// First boundary point along point + t dir, t > 0; which = 1 when det K1
// vanishes there, 2 for det K2, 3 for both.
struct RayHit {
  Eigen::Vector2d point;
  int which = 0;
  double t = 0;
};
std::optional<RayHit> quartic_ray_hit(const QuarticCoeffs& c, const Eigen::Vector2d& interior,
                                      const Eigen::Vector2d& dir);

// Quartic whose blocks at (q12, q16) are the given rational matrices.
struct QuarticFromBlocks {
  QuarticCoeffs coeffs;
  Rational q12, q16;
};
QuarticFromBlocks quartic_from_blocks(const std::array<Rational, 3>& k1,
                                      const std::array<Rational, 3>& k2);
// Positive definite rational blocks with small entries.
QuarticFromBlocks random_sos_quartic(std::mt19937_64& rng);

// ---- symmetric ternary sextics

// a1..a7: coefficients of x1^6, x1^5x2, x1^4x2^2, x1^4x2x3, x1^3x2^3,
// x1^3x2^2x3, x1^2x2^2x3^2
struct SexticCoeffs {
  std::array<Rational, 7> a;
  SparsePoly poly() const;
  static SexticCoeffs from_poly(const SparsePoly& f);
};

// free = (q12, q16, q18, q110, q49, q410)
struct SexticBlocks {
  Eigen::Matrix3d trivial;
  Eigen::Matrix3d standard;
  double alternating = 0;
};
SexticBlocks sextic_blocks(const SexticCoeffs& c, const std::array<double, 6>& free);

struct SexticObstructions {
  Rational case_a;
  Rational case_b;
};
SexticObstructions sextic_rank3_obstructions(const SexticCoeffs& c);

}  // namespace symsos
