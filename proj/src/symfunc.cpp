#include "symsos/symfunc.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace symsos {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) {
            return c == ' ' || c == '(' || c == ')';
          }),
          s.end());
  if (s.empty()) return Partition();
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

int Partition::n_statistic() const {
  int s = 0;
  for (int i = 0; i < length(); ++i) s += i * parts_[i];
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return Partition();
  for (int j = 0; j < parts_[0]; ++j) {
    int cnt = 0;
    for (int p : parts_)
      if (p > j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

bool Partition::operator<(const Partition& o) const {
  return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(), parts_.begin(),
                                      parts_.end());
}

Dominance dominance(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("dominance needs partitions of equal weight");
  int len = std::max(lambda.length(), mu.length());
  bool mu_ge = true, lambda_ge = true;
  int sl = 0, sm = 0;
  for (int i = 0; i < len; ++i) {
    sl += lambda[i];
    sm += mu[i];
    if (sm < sl) mu_ge = false;
    if (sl < sm) lambda_ge = false;
  }
  if (mu_ge && lambda_ge) return Dominance::Equal;
  if (mu_ge) return Dominance::Less;
  if (lambda_ge) return Dominance::Greater;
  return Dominance::Incomparable;
}

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::Less: return "Less";
    case Dominance::Greater: return "Greater";
    case Dominance::Equal: return "Equal";
    case Dominance::Incomparable: return "Incomparable";
  }
  return "?";
}

namespace {

void partitions_rec(int left, int max_part, int max_parts, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (left == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_parts >= 0 && static_cast<int>(cur.size()) >= max_parts) return;
  for (int p = std::min(left, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(left - p, p, max_parts, cur, out);
    cur.pop_back();
  }
}

SparsePoly one_part(SymBasis kind, int k, int n) {
  if (k == 0) return SparsePoly::constant(n, 1);
  SparsePoly r(n);
  switch (kind) {
    case SymBasis::p:
      for (int i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = k;
        r.add_term(e, 1);
      }
      break;
    case SymBasis::h:
      for (const auto& e : monomials(n, k)) r.add_term(e, 1);
      break;
    case SymBasis::e:
      for (const auto& e : monomials(n, k)) {
        if (std::all_of(e.begin(), e.end(), [](int v) { return v <= 1; })) r.add_term(e, 1);
      }
      break;
    default:
      throw std::logic_error("one_part: unsupported basis");
  }
  return r;
}

SparsePoly product_basis(SymBasis kind, const Partition& lambda, int n) {
  SparsePoly r = SparsePoly::constant(n, 1);
  std::map<int, SparsePoly> cache;
  for (int k : lambda.parts()) {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, one_part(kind, k, n)).first;
    r = r * it->second;
  }
  return r;
}

// Determinant of a square matrix of polynomials by expansion along rows,
// memoized on the set of consumed columns.
SparsePoly poly_determinant(const std::vector<std::vector<SparsePoly>>& M, int n) {
  int L = static_cast<int>(M.size());
  if (L == 0) return SparsePoly::constant(n, 1);
  std::map<unsigned, SparsePoly> memo;
  auto rec = [&](auto&& self, unsigned used) -> SparsePoly {
    int row = __builtin_popcount(used);
    if (row == L) return SparsePoly::constant(n, 1);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    SparsePoly acc(n);
    int sign_count = 0;
    for (int c = 0; c < L; ++c) {
      if (used & (1u << c)) {
        ++sign_count;
        continue;
      }
      if (M[row][c].is_zero()) continue;
      SparsePoly minor = self(self, used | (1u << c));
      SparsePoly term = M[row][c] * minor;
      // sign: column c is at position c - (#used columns before c) among the free ones
      if ((c - sign_count) % 2) acc -= term;
      else acc += term;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0u);
}

}  // namespace

std::vector<Partition> partitions_of(int N, int max_parts) {
  if (N < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(N, N, max_parts, cur, out);
  return out;
}

SymBasis parse_sym_basis(std::string_view s) {
  if (s == "m") return SymBasis::m;
  if (s == "e") return SymBasis::e;
  if (s == "p") return SymBasis::p;
  if (s == "h") return SymBasis::h;
  if (s == "s") return SymBasis::s;
  throw std::invalid_argument("unknown basis '" + std::string(s) + "'");
}

const char* to_string(SymBasis b) {
  switch (b) {
    case SymBasis::m: return "m";
    case SymBasis::e: return "e";
    case SymBasis::p: return "p";
    case SymBasis::h: return "h";
    case SymBasis::s: return "s";
  }
  return "?";
}

std::vector<Exponent> orbit_exponents(const Partition& lambda, int n) {
  if (lambda.length() > n) return {};
  Exponent e(n, 0);
  for (int i = 0; i < lambda.length(); ++i) e[i] = lambda[i];
  std::sort(e.begin(), e.end());
  std::vector<Exponent> out;
  do {
    out.push_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  std::sort(out.begin(), out.end(), GrlexDescending());
  return out;
}

SparsePoly basis_poly(SymBasis kind, const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("basis_poly: n must be positive");
  switch (kind) {
    case SymBasis::m: {
      SparsePoly r(n);
      for (const auto& e : orbit_exponents(lambda, n)) r.add_term(e, 1);
      return r;
    }
    case SymBasis::e:
    case SymBasis::p:
    case SymBasis::h:
      return product_basis(kind, lambda, n);
    case SymBasis::s: {
      if (lambda.length() > n) return SparsePoly(n);
      int L = lambda.length();
      std::map<int, SparsePoly> hs;
      auto h = [&](int k) -> SparsePoly {
        if (k < 0) return SparsePoly(n);
        auto it = hs.find(k);
        if (it == hs.end()) it = hs.emplace(k, one_part(SymBasis::h, k, n)).first;
        return it->second;
      };
      std::vector<std::vector<SparsePoly>> M(L, std::vector<SparsePoly>(L, SparsePoly(n)));
      for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) M[i][j] = h(lambda[i] - i + j);
      return poly_determinant(M, n);
    }
  }
  throw std::logic_error("basis_poly: unknown kind");
}

SparsePoly term_normalize(const SparsePoly& g) {
  Rational at_one = 0;
  for (const auto& kv : g.terms()) at_one += kv.second;
  if (at_one == 0) throw std::domain_error("term_normalize: polynomial vanishes at all-ones");
  SparsePoly r = g;
  r *= Rational(1) / at_one;
  return r;
}

}  // namespace symsos
