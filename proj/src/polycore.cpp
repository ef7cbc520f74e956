#include "symsos/polycore.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <sstream>

namespace symsos {

bool GrlexDescending::operator()(const Exponent& a, const Exponent& b) const {
  int da = exponent_degree(a), db = exponent_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

int exponent_degree(const Exponent& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

namespace {

void monomials_rec(int i, int left, Exponent& cur, std::vector<Exponent>& out) {
  int n = static_cast<int>(cur.size());
  if (i == n - 1) {
    cur[i] = left;
    out.push_back(cur);
    return;
  }
  for (int a = left; a >= 0; --a) {
    cur[i] = a;
    monomials_rec(i + 1, left - a, cur, out);
  }
}

}  // namespace

std::vector<Exponent> monomials(int n, int d) {
  std::vector<Exponent> out;
  if (n <= 0 || d < 0) return out;
  Exponent cur(n, 0);
  monomials_rec(0, d, cur, out);
  return out;
}

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}

namespace {

// Decimal literal with optional fraction and exponent, converted exactly.
Rational decimal_to_rational(std::string_view s, std::size_t base_pos) {
  std::size_t i = 0;
  mpz_class digits = 0;
  int scale = 0;
  bool any = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits = digits * 10 + (s[i] - '0');
    ++i;
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = digits * 10 + (s[i] - '0');
      --scale;
      ++i;
      any = true;
    }
  }
  if (!any) throw ParseError("expected a number", base_pos);
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    int ex = 0;
    bool exp_digits = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ex = ex * 10 + (s[i] - '0');
      if (ex > 100000) throw ParseError("exponent too large", base_pos + i);
      ++i;
      exp_digits = true;
    }
    if (!exp_digits) throw ParseError("malformed exponent", base_pos + i);
    scale += sign * ex;
  }
  if (i != s.size()) throw ParseError("unexpected character in number", base_pos + i);
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(scale)));
  Rational q = scale >= 0 ? Rational(digits * p10) : Rational(digits, p10);
  q.canonicalize();
  return q;
}

class PolyParser {
 public:
  PolyParser(std::string_view text, int n) : s_(text), n_(n) {}

  SparsePoly parse() {
    SparsePoly result(n_);
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      auto [e, c] = parse_term();
      if (sign < 0) c = -c;
      result.add_term(e, c);
      skip_ws();
      if (pos_ >= s_.size()) break;
    }
    return result;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::pair<Exponent, Rational> parse_term() {
    Exponent e(n_, 0);
    Rational c = 1;
    bool need_factor = true;
    while (need_factor) {
      skip_ws();
      if (pos_ >= s_.size()) throw ParseError("expected a factor", pos_);
      char ch = s_[pos_];
      if (ch == 'x') {
        parse_variable(e);
      } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
        c *= parse_number();
      } else if (ch == '(') {
        ++pos_;
        skip_ws();
        int sign = 1;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
          sign = s_[pos_] == '-' ? -1 : 1;
          ++pos_;
        }
        c *= sign * parse_number();
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError("expected ')'", pos_);
        ++pos_;
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
      }
      skip_ws();
      need_factor = pos_ < s_.size() && s_[pos_] == '*';
      if (need_factor) ++pos_;
    }
    return {e, c};
  }

  Rational parse_number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
            s_[pos_] == 'e' || s_[pos_] == 'E' ||
            ((s_[pos_] == '-' || s_[pos_] == '+') && pos_ > start &&
             (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E'))))
      ++pos_;
    Rational q = decimal_to_rational(s_.substr(start, pos_ - start), start);
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip_ws();
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (dstart == pos_) throw ParseError("expected denominator", dstart);
      mpz_class den(std::string(s_.substr(dstart, pos_ - dstart)));
      if (den == 0) throw ParseError("zero denominator", dstart);
      q /= Rational(den);
    }
    return q;
  }

  void parse_variable(Exponent& e) {
    std::size_t start = pos_;
    ++pos_;
    std::size_t dstart = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (dstart == pos_) throw ParseError("expected variable index", dstart);
    long idx = 0;
    std::from_chars(s_.data() + dstart, s_.data() + pos_, idx);
    if (idx < 1 || idx > n_)
      throw ParseError("variable index x" + std::to_string(idx) + " out of range", start);
    long power = 1;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      std::size_t pstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pstart == pos_) throw ParseError("expected exponent", pstart);
      auto res = std::from_chars(s_.data() + pstart, s_.data() + pos_, power);
      if (res.ec != std::errc() || power > 10000) throw ParseError("exponent too large", pstart);
    }
    e[idx - 1] += static_cast<int>(power);
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

std::string monomial_string(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

std::string shortest_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <typename Coeff, typename AbsStr>
std::string render_impl(const Polynomial<Coeff>& f, AbsStr abs_str) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    bool neg = c < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_string(e);
    Coeff a = neg ? Coeff(-c) : c;
    if (mono.empty()) {
      out += abs_str(a);
    } else if (a == Coeff(1)) {
      out += mono;
    } else {
      out += abs_str(a) + '*' + mono;
    }
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  int sign = 1;
  std::size_t off = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    sign = s[0] == '-' ? -1 : 1;
    off = 1;
  }
  s = s.substr(off);
  auto slash = s.find('/');
  Rational q;
  if (slash == std::string_view::npos) {
    q = decimal_to_rational(s, b + off);
  } else {
    q = decimal_to_rational(s.substr(0, slash), b + off);
    std::string_view den = s.substr(slash + 1);
    if (den.empty()) throw ParseError("expected denominator", b + off + slash + 1);
    for (std::size_t i = 0; i < den.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(den[i])))
        throw ParseError("malformed denominator", b + off + slash + 1 + i);
    mpz_class d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator", b + off + slash + 1);
    q /= Rational(d);
  }
  if (sign < 0) q = -q;
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

SparsePoly parse_poly(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("variable count must be positive");
  return PolyParser(text, n).parse();
}

std::string render_poly(const SparsePoly& f) {
  return render_impl(f, [](const Rational& q) { return q.get_str(); });
}

std::string render_poly(const RealPoly& f) { return render_impl(f, shortest_double); }

RealPoly parse_real_poly(std::string_view text, int n) { return to_real(parse_poly(text, n)); }

double to_double(const Rational& q) {
  double d = q.get_d();
  if (!std::isfinite(d)) return d;
  double best = d;
  Rational err = abs(q - Rational(d));
  for (double cand : {std::nextafter(d, -HUGE_VAL), std::nextafter(d, HUGE_VAL)}) {
    if (!std::isfinite(cand)) continue;
    Rational e = abs(q - Rational(cand));
    if (e < err) {
      err = e;
      best = cand;
    }
  }
  return best;
}

RealPoly to_real(const SparsePoly& f) {
  RealPoly r(f.num_vars());
  for (const auto& [e, c] : f.terms()) r.add_term(e, to_double(c));
  return r;
}

SparsePoly substitute_squares(const SparsePoly& f) {
  SparsePoly r(f.num_vars());
  for (const auto& [e, c] : f.terms()) {
    Exponent d = e;
    for (int& v : d) v *= 2;
    r.add_term(d, c);
  }
  return r;
}

namespace {

template <typename Coeff>
Coeff eval_impl(const Polynomial<Coeff>& f, const std::vector<Coeff>& point) {
  if (static_cast<int>(point.size()) != f.num_vars())
    throw std::invalid_argument("evaluation point has wrong dimension");
  Coeff total = 0;
  for (const auto& [e, c] : f.terms()) {
    Coeff t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

template <typename Coeff, typename Entry>
Polynomial<Coeff> subst_impl(const Polynomial<Coeff>& f, int rows, int cols, Entry entry) {
  int n = f.num_vars();
  if (rows != n || cols != n) throw std::invalid_argument("substitution matrix has wrong size");
  std::vector<Polynomial<Coeff>> forms;
  for (int i = 0; i < n; ++i) {
    Polynomial<Coeff> l(n);
    for (int j = 0; j < n; ++j) {
      Exponent e(n, 0);
      e[j] = 1;
      l.add_term(e, entry(i, j));
    }
    forms.push_back(std::move(l));
  }
  // powers[i][k] = forms[i]^k, built lazily
  std::vector<std::vector<Polynomial<Coeff>>> powers(n);
  auto power = [&](int i, int k) -> const Polynomial<Coeff>& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(Polynomial<Coeff>::constant(n, Coeff(1)));
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * forms[i]);
    return v[k];
  };
  Polynomial<Coeff> result(n);
  for (const auto& [e, c] : f.terms()) {
    Polynomial<Coeff> t = Polynomial<Coeff>::constant(n, c);
    for (int i = 0; i < n; ++i)
      if (e[i] > 0) t = t * power(i, e[i]);
    result += t;
  }
  return result;
}

}  // namespace

Rational eval(const SparsePoly& f, const std::vector<Rational>& point) {
  return eval_impl(f, point);
}

double eval(const RealPoly& f, const std::vector<double>& point) { return eval_impl(f, point); }

SparsePoly apply_linear_substitution(const SparsePoly& f, const RationalMatrix& A) {
  int rows = static_cast<int>(A.size());
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != rows)
      throw std::invalid_argument("substitution matrix is not square");
  return subst_impl(f, rows, rows, [&](int i, int j) { return A[i][j]; });
}

RealPoly apply_linear_substitution(const RealPoly& f, const Eigen::MatrixXd& A) {
  return subst_impl(f, static_cast<int>(A.rows()), static_cast<int>(A.cols()),
                    [&](int i, int j) { return A(i, j); });
}

double max_coeff_diff(const RealPoly& a, const RealPoly& b) {
  return max_abs_coeff(a - b);
}

double max_abs_coeff(const RealPoly& a) {
  double m = 0;
  for (const auto& kv : a.terms()) m = std::max(m, std::abs(kv.second));
  return m;
}

RealPoly prune(const RealPoly& f, double tol) {
  RealPoly r(f.num_vars());
  for (const auto& [e, c] : f.terms())
    if (std::abs(c) > tol) r.add_term(e, c);
  return r;
}

}  // namespace symsos
