// Sparse multivariate polynomials with exact rational or double coefficients.
#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symsos {

using Rational = mpq_class;
using Exponent = std::vector<int>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Graded order, larger total degree first, ties broken lexicographically with
// x1 most significant. Used as the canonical term order everywhere.
struct GrlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

int exponent_degree(const Exponent& e);

// All exponent vectors of total degree d in n variables, in canonical order.
std::vector<Exponent> monomials(int n, int d);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
// Nearest double (mpq_get_d truncates).
double to_double(const Rational& q);

template <typename Coeff>
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Coeff, GrlexDescending>;

  Polynomial() = default;
  explicit Polynomial(int n) : n_(n) {}

  static Polynomial constant(int n, const Coeff& c) {
    Polynomial p(n);
    p.add_term(Exponent(n, 0), c);
    return p;
  }
  static Polynomial variable(int n, int i) {
    Exponent e(n, 0);
    e.at(i) = 1;
    Polynomial p(n);
    p.add_term(e, Coeff(1));
    return p;
  }
  static Polynomial monomial(const Exponent& e, const Coeff& c = Coeff(1)) {
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }

  int num_vars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : exponent_degree(terms_.begin()->first);
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    for (const auto& [e, c] : terms_)
      if (exponent_degree(e) != d) return false;
    return true;
  }

  Coeff coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Exponent& e, const Coeff& c) {
    if (static_cast<int>(e.size()) != n_)
      throw std::invalid_argument("exponent length does not match variable count");
    if (c == Coeff(0)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff(0)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, Coeff(-c));
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    if (s == Coeff(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_vars(b);
    Polynomial r(a.n_);
    Exponent e(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, Coeff(ca * cb));
      }
    }
    return r;
  }

  Polynomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    Polynomial result = constant(n_, Coeff(1));
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  void check_vars(const Polynomial& o) const {
    if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
  }

  int n_ = 0;
  TermMap terms_;
};

using SparsePoly = Polynomial<Rational>;
using RealPoly = Polynomial<double>;

SparsePoly parse_poly(std::string_view text, int n);
std::string render_poly(const SparsePoly& f);
// Shortest round-trip decimal coefficients.
std::string render_poly(const RealPoly& f);
RealPoly parse_real_poly(std::string_view text, int n);

RealPoly to_real(const SparsePoly& f);

SparsePoly substitute_squares(const SparsePoly& f);

Rational eval(const SparsePoly& f, const std::vector<Rational>& point);
double eval(const RealPoly& f, const std::vector<double>& point);

// x_i -> sum_j A(i,j) x_j, then expand.
SparsePoly apply_linear_substitution(const SparsePoly& f, const RationalMatrix& A);
RealPoly apply_linear_substitution(const RealPoly& f, const Eigen::MatrixXd& A);

// Max over all monomials of |coefficient difference|.
double max_coeff_diff(const RealPoly& a, const RealPoly& b);
double max_abs_coeff(const RealPoly& a);

// Drop coefficients of magnitude <= tol.
RealPoly prune(const RealPoly& f, double tol);

}  // namespace symsos
