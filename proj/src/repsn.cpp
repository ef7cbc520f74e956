#include "symsos/repsn.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace symsos {

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Partition cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lens;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(lens);
}

int sign(const Permutation& p) {
  int s = 1;
  for (int len : cycle_type(p).parts())
    if (len % 2 == 0) s = -s;
  return s;
}

Eigen::MatrixXd permutation_matrix(const Permutation& p) {
  int n = static_cast<int>(p.size());
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) P(p[j], j) = 1.0;
  return P;
}

std::vector<Permutation> all_permutations(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

HookData hook_data(const Partition& lambda) {
  HookData h;
  h.lambda = lambda;
  Partition conj = lambda.conjugate();
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      h.hooks.push_back((lambda[i] - j - 1) + (conj[j] - i - 1) + 1);
  h.n_stat = lambda.n_statistic();
  return h;
}

std::int64_t irrep_dimension(const Partition& lambda) {
  HookData h = hook_data(lambda);
  // n!/prod(hooks) with interleaved division to stay in range
  std::vector<int> hooks = h.hooks;
  long double acc = 1;
  int n = lambda.weight();
  for (int k = 1; k <= n; ++k) acc *= k;
  for (int v : hooks) acc /= v;
  return static_cast<std::int64_t>(std::llround(acc));
}

std::int64_t multiplicity(const Partition& lambda, int d) {
  HookData h = hook_data(lambda);
  int target = d - h.n_stat;
  if (target < 0) return 0;
  std::vector<std::int64_t> ways(target + 1, 0);
  ways[0] = 1;
  for (int hk : h.hooks)
    for (int t = hk; t <= target; ++t) ways[t] += ways[t - hk];
  return ways[target];
}

namespace {

using CharMemo = std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t>;

std::int64_t mn_rec(const std::vector<int>& lam, const std::vector<int>& mu, std::size_t mu_pos,
                    CharMemo& memo) {
  if (mu_pos == mu.size()) return lam.empty() ? 1 : 0;
  std::vector<int> rest(mu.begin() + mu_pos, mu.end());
  auto key = std::make_pair(lam, rest);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int r = mu[mu_pos];
  int len = static_cast<int>(lam.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lam[i] + (len - 1 - i);
  std::set<int> bset(beta.begin(), beta.end());
  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    int nb = beta[i] - r;
    if (nb < 0 || bset.count(nb)) continue;
    int between = 0;
    for (int b : beta)
      if (b > nb && b < beta[i]) ++between;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    std::vector<int> nlam;
    for (int k = 0; k < len; ++k) {
      int part = nbeta[k] - (len - 1 - k);
      if (part > 0) nlam.push_back(part);
    }
    std::int64_t sub = mn_rec(nlam, mu, mu_pos + 1, memo);
    total += (between % 2 ? -sub : sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t character(const Partition& lambda, const Partition& ctype) {
  if (lambda.weight() != ctype.weight())
    throw std::invalid_argument("character: weight mismatch");
  CharMemo memo;
  return mn_rec(lambda.parts(), ctype.parts(), 0, memo);
}

std::int64_t multiplicity_oracle(const Partition& lambda, int d) {
  int n = lambda.weight();
  if (n > 8) throw std::invalid_argument("multiplicity_oracle: n must be at most 8");
  if (d < 0) return 0;
  std::map<Partition, std::pair<std::int64_t, Permutation>> classes;
  for (const auto& p : all_permutations(n)) {
    auto [it, inserted] = classes.try_emplace(cycle_type(p), 0, p);
    it->second.first += 1;
  }
  std::vector<Exponent> monos = monomials(n, d);
  CharMemo memo;
  std::int64_t total = 0, order = 0;
  for (const auto& [ct, entry] : classes) {
    const auto& [count, rep] = entry;
    std::int64_t fixed = 0;
    for (const auto& e : monos) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = e[rep[i]] == e[i];
      if (ok) ++fixed;
    }
    total += count * mn_rec(lambda.parts(), ct.parts(), 0, memo) * fixed;
    order += count;
  }
  if (total % order != 0) throw std::logic_error("multiplicity_oracle: non-integral inner product");
  return total / order;
}

Rational quasi_poly_Q(int d) {
  static const Rational c[6] = {Rational(1), Rational(5, 12), Rational(2, 3),
                                Rational(3, 4), Rational(2, 3), Rational(5, 12)};
  Rational D(d);
  return D * D / 12 + D / 2 + c[((d % 6) + 6) % 6];
}

Rational quasi_poly_P(int d) {
  static const Rational c[3] = {Rational(1), Rational(1), Rational(2, 3)};
  Rational D(d);
  return D * D / 6 + D * 5 / 6 + c[((d % 3) + 3) % 3];
}

QuasiPolyValues quasi_poly_check(int d) { return {quasi_poly_Q(d), quasi_poly_P(d)}; }

namespace {

void tableaux_rec(const Partition& lambda, int k, std::vector<int>& row_len,
                  StandardTableau& cur, std::vector<StandardTableau>& out) {
  int n = lambda.weight();
  if (k == n) {
    out.push_back(cur);
    return;
  }
  for (int i = 0; i < lambda.length(); ++i) {
    if (row_len[i] >= lambda[i]) continue;
    if (i > 0 && row_len[i] >= row_len[i - 1]) continue;
    cur.row[k] = i;
    cur.col[k] = row_len[i];
    ++row_len[i];
    tableaux_rec(lambda, k + 1, row_len, cur, out);
    --row_len[i];
  }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
  int n = lambda.weight();
  std::vector<StandardTableau> out;
  StandardTableau cur{std::vector<int>(n), std::vector<int>(n)};
  std::vector<int> row_len(lambda.length(), 0);
  tableaux_rec(lambda, 0, row_len, cur, out);
  return out;
}

YoungIrrep young_orthogonal_form(const Partition& lambda) {
  int n = lambda.weight();
  if (n > 8) throw std::invalid_argument("young_orthogonal_form: n must be at most 8");
  auto tabs = standard_tableaux(lambda);
  int dim = static_cast<int>(tabs.size());
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
  for (int t = 0; t < dim; ++t) index[{tabs[t].row, tabs[t].col}] = t;
  YoungIrrep y;
  y.lambda = lambda;
  y.dim = dim;
  for (int k = 0; k + 1 < n; ++k) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);
    for (int t = 0; t < dim; ++t) {
      const auto& T = tabs[t];
      int r = (T.col[k + 1] - T.row[k + 1]) - (T.col[k] - T.row[k]);
      M(t, t) = 1.0 / r;
      if (r == 1 || r == -1) continue;
      StandardTableau S = T;
      std::swap(S.row[k], S.row[k + 1]);
      std::swap(S.col[k], S.col[k + 1]);
      int s = index.at({S.row, S.col});
      M(s, t) = std::sqrt(1.0 - 1.0 / (double(r) * r));
    }
    y.generators.push_back(M);
  }
  return y;
}

Eigen::MatrixXd YoungIrrep::matrix(const Permutation& p) const {
  Permutation w = p;
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(dim, dim);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        M = generators[i] * M;
        changed = true;
      }
    }
  }
  return M;
}

IrrepData young_orthogonal_irrep(const Partition& lambda) {
  YoungIrrep y = young_orthogonal_form(lambda);
  IrrepData irr;
  irr.label = lambda.to_string();
  irr.dim = y.dim;
  irr.partition = lambda;
  for (const auto& p : all_permutations(lambda.weight())) {
    irr.matrices.push_back(y.matrix(p));
    irr.character.push_back(irr.matrices.back().trace());
  }
  return irr;
}

// ---------------------------------------------------------------------------

namespace {
constexpr double kKeyGrid = 1e-6;
}

std::vector<long long> FiniteGroup::key(const Eigen::MatrixXd& m) const {
  std::vector<long long> k(m.size());
  for (Eigen::Index i = 0; i < m.size(); ++i)
    k[i] = std::llround(m.data()[i] / kKeyGrid);
  return k;
}

std::optional<std::size_t> FiniteGroup::find(const Eigen::MatrixXd& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) return std::nullopt;
  auto it = lookup_.find(key(m));
  if (it == lookup_.end()) return std::nullopt;
  for (std::size_t idx : it->second)
    if ((elements_[idx] - m).cwiseAbs().maxCoeff() <= std::max(tol_, 1e-7)) return idx;
  return std::nullopt;
}

void FiniteGroup::index_elements() {
  lookup_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i) lookup_[key(elements_[i])].push_back(i);
  inverse_.assign(elements_.size(), 0);
  auto id = find(Eigen::MatrixXd::Identity(dim_, dim_));
  if (!id) throw std::logic_error("group has no identity element");
  identity_ = *id;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    auto inv = find(elements_[i].inverse());
    if (!inv) throw std::runtime_error("group is not closed under inverses");
    inverse_[i] = *inv;
  }
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("symmetric group: n must be in 1..7");
  FiniteGroup G;
  G.dim_ = n;
  G.name_ = "S" + std::to_string(n);
  G.perms_ = all_permutations(n);
  for (const auto& p : G.perms_) G.elements_.push_back(permutation_matrix(p));
  for (int k = 0; k + 1 < n; ++k) {
    Permutation s(n);
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[k], s[k + 1]);
    G.generators_.push_back(permutation_matrix(s));
  }
  if (G.generators_.empty()) G.generators_.push_back(Eigen::MatrixXd::Identity(n, n));
  G.index_elements();
  return G;
}

FiniteGroup FiniteGroup::from_generators(const std::vector<Eigen::MatrixXd>& generators,
                                         double tol, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("group_closure: no generators");
  FiniteGroup G;
  G.dim_ = static_cast<int>(generators[0].rows());
  G.tol_ = tol;
  for (const auto& g : generators)
    if (g.rows() != G.dim_ || g.cols() != G.dim_)
      throw std::invalid_argument("group_closure: generators must be square of equal size");
  G.generators_ = generators;
  G.elements_.push_back(Eigen::MatrixXd::Identity(G.dim_, G.dim_));
  G.lookup_[G.key(G.elements_[0])].push_back(0);
  for (std::size_t head = 0; head < G.elements_.size(); ++head) {
    for (const auto& g : generators) {
      Eigen::MatrixXd m = G.elements_[head] * g;
      if (G.find(m)) continue;
      if (G.elements_.size() >= cap)
        throw std::runtime_error("group_closure: more than " + std::to_string(cap) +
                                 " elements; group infinite or tolerance too tight");
      G.lookup_[G.key(m)].push_back(G.elements_.size());
      G.elements_.push_back(std::move(m));
    }
  }
  G.index_elements();
  // permutation matrices get the fast path
  bool all_perm = true;
  std::vector<Permutation> perms;
  for (const auto& m : G.elements_) {
    Permutation p(G.dim_, -1);
    for (int j = 0; j < G.dim_ && all_perm; ++j) {
      for (int i = 0; i < G.dim_; ++i) {
        double v = m(i, j);
        if (std::abs(v - 1.0) < 1e-12) {
          if (p[j] >= 0) all_perm = false;
          p[j] = i;
        } else if (std::abs(v) > 1e-12) {
          all_perm = false;
        }
      }
      if (p[j] < 0) all_perm = false;
    }
    if (!all_perm) break;
    perms.push_back(p);
  }
  if (all_perm) G.perms_ = std::move(perms);
  return G;
}

std::size_t FiniteGroup::product(std::size_t i, std::size_t j) const {
  auto r = find(elements_[i] * elements_[j]);
  if (!r) throw std::logic_error("group product not found");
  return *r;
}

std::vector<std::vector<std::size_t>> FiniteGroup::conjugacy_classes() const {
  std::vector<int> cls(order(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < order(); ++x) {
    if (cls[x] >= 0) continue;
    std::set<std::size_t> members;
    for (std::size_t g = 0; g < order(); ++g) {
      auto y = find(elements_[g] * elements_[x] * elements_[inverse_[g]]);
      if (!y) throw std::logic_error("conjugate not found");
      members.insert(*y);
    }
    for (std::size_t y : members) cls[y] = static_cast<int>(out.size());
    out.emplace_back(members.begin(), members.end());
  }
  return out;
}

std::vector<Eigen::MatrixXd> group_closure(const std::vector<Eigen::MatrixXd>& generators,
                                           double tol, std::size_t cap) {
  return FiniteGroup::from_generators(generators, tol, cap).elements();
}

Eigen::MatrixXd induced_action(const Eigen::MatrixXd& g, const std::vector<Exponent>& basis) {
  int N = static_cast<int>(basis.size());
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(N, N);
  if (N == 0) return D;
  int n = static_cast<int>(basis[0].size());
  if (g.rows() != n || g.cols() != n)
    throw std::invalid_argument("induced_action: matrix size does not match variable count");
  std::map<Exponent, int, GrlexDescending> index;
  for (int i = 0; i < N; ++i) index[basis[i]] = i;

  // (g x)_i = x_{pi(i)} when g is a permutation matrix
  std::vector<int> pi(n, -1);
  bool is_perm = true;
  for (int i = 0; i < n && is_perm; ++i)
    for (int k = 0; k < n; ++k) {
      double v = g(i, k);
      if (v == 1.0 && pi[i] < 0) pi[i] = k;
      else if (v != 0.0) is_perm = false;
    }
  for (int i = 0; i < n && is_perm; ++i)
    if (pi[i] < 0) is_perm = false;

  for (int j = 0; j < N; ++j) {
    if (is_perm) {
      Exponent e(n, 0);
      for (int i = 0; i < n; ++i) e[pi[i]] += basis[j][i];
      auto it = index.find(e);
      if (it == index.end()) throw std::invalid_argument("induced_action: basis not closed");
      D(it->second, j) = 1.0;
      continue;
    }
    RealPoly img = apply_linear_substitution(RealPoly::monomial(basis[j], 1.0), g);
    for (const auto& [e, c] : img.terms()) {
      auto it = index.find(e);
      if (it == index.end()) {
        if (std::abs(c) > 1e-12) throw std::invalid_argument("induced_action: basis not closed");
        continue;
      }
      D(it->second, j) = c;
    }
  }
  return D;
}

int frobenius_schur(const std::vector<double>& chi, const FiniteGroup& group) {
  if (chi.size() != group.order()) throw std::invalid_argument("character has wrong length");
  double s = 0;
  for (std::size_t g = 0; g < group.order(); ++g) s += chi[group.product(g, g)];
  return static_cast<int>(std::lround(s / group.order()));
}

std::vector<Exponent> orbit_ordered_monomials(int n, int d) {
  std::vector<Exponent> out;
  for (const auto& lam : partitions_of(d, n))
    for (const auto& e : orbit_exponents(lam, n)) out.push_back(e);
  return out;
}

std::vector<std::vector<int>> monomial_orbits(int n, int d) {
  std::vector<std::vector<int>> out;
  int idx = 0;
  for (const auto& lam : partitions_of(d, n)) {
    std::vector<int> orbit;
    for (std::size_t k = 0; k < orbit_exponents(lam, n).size(); ++k) orbit.push_back(idx++);
    out.push_back(std::move(orbit));
  }
  return out;
}

// ---------------------------------------------------------------------------

void GroupRep::build_action(int d, BasisOrder order) {
  int n = group_->dim();
  degree_ = d;
  basis_ = order == BasisOrder::Orbit ? orbit_ordered_monomials(n, d) : monomials(n, d);
  int N = static_cast<int>(basis_.size());
  mono_action_.clear();
  perm_action_ = true;
  for (std::size_t g = 0; g < group_->order(); ++g) {
    Eigen::MatrixXd D = induced_action(group_->element(group_->inverse(g)), basis_);
    for (Eigen::Index k = 0; k < D.size() && perm_action_; ++k) {
      double v = D.data()[k];
      if (v != 0.0 && v != 1.0) perm_action_ = false;
    }
    mono_action_.push_back(std::move(D));
  }
  action_ = mono_action_;
  frame_ = Eigen::MatrixXd::Identity(N, N);
}

void GroupRep::compute_multiplicities() {
  mult_.clear();
  int N = dim();
  int total = 0;
  for (const auto& irr : irreps_) {
    int m;
    if (symmetric_ && irr.partition) {
      m = static_cast<int>(multiplicity(*irr.partition, degree_));
    } else {
      if (irr.character.size() != group_->order())
        throw std::invalid_argument("irrep '" + irr.label + "' has no character data");
      double s = 0;
      for (std::size_t g = 0; g < group_->order(); ++g)
        s += irr.character[g] * mono_action_[g].trace();
      s /= group_->order();
      if (std::abs(s - std::round(s)) > 1e-6 || s < -1e-6)
        throw std::runtime_error("non-integral multiplicity for irrep '" + irr.label + "'");
      m = static_cast<int>(std::lround(s));
    }
    mult_.push_back(m);
    total += m * irr.dim;
  }
  if (total != N)
    throw std::runtime_error("irreducible data incomplete: sum m_i n_i = " +
                             std::to_string(total) + " but N = " + std::to_string(N));
}

GroupRep GroupRep::symmetric(int n, int d, BasisOrder order) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  GroupRep r;
  r.group_ = std::make_shared<FiniteGroup>(FiniteGroup::symmetric(n));
  r.symmetric_ = true;
  r.build_action(d, order);
  for (const auto& lam : partitions_of(n)) r.irreps_.push_back(young_orthogonal_irrep(lam));
  r.compute_multiplicities();
  return r;
}

GroupRep GroupRep::from_group(std::shared_ptr<const FiniteGroup> group, int d,
                              std::vector<IrrepData> irreps, BasisOrder order) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  GroupRep r;
  r.group_ = std::move(group);
  r.build_action(d, order);
  r.irreps_ = std::move(irreps);
  for (auto& irr : r.irreps_) {
    if (irr.character.empty() && irr.has_matrices())
      for (const auto& M : irr.matrices) irr.character.push_back(M.trace());
  }
  r.compute_multiplicities();
  return r;
}

GroupRep GroupRep::with_frame(const Eigen::MatrixXd& U) const {
  GroupRep r = *this;
  Eigen::MatrixXd Uinv = U.inverse();
  for (auto& A : r.action_) A = Uinv * A * U;
  r.frame_ = frame_ * U;
  r.perm_action_ = perm_action_ && (U - Eigen::MatrixXd::Identity(U.rows(), U.cols()))
                                           .cwiseAbs()
                                           .maxCoeff() == 0.0;
  return r;
}

void GroupRep::set_irrep_matrices(std::size_t i, std::vector<Eigen::MatrixXd> mats) {
  irreps_.at(i).matrices = std::move(mats);
}

// ---------------------------------------------------------------------------

namespace {

double json_number(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_rational(v.get<std::string>()).get_d();
  throw std::invalid_argument("expected a number or numeric string in group file");
}

Eigen::MatrixXd json_matrix(const nlohmann::json& v) {
  if (!v.is_array() || v.empty()) throw std::invalid_argument("expected a matrix");
  int rows = static_cast<int>(v.size());
  int cols = static_cast<int>(v[0].size());
  Eigen::MatrixXd M(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(v[i].size()) != cols) throw std::invalid_argument("ragged matrix");
    for (int j = 0; j < cols; ++j) M(i, j) = json_number(v[i][j]);
  }
  return M;
}

}  // namespace

MatrixGroupData parse_matrix_group(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  std::vector<Eigen::MatrixXd> gens;
  for (const auto& g : j.at("generators")) gens.push_back(json_matrix(g));
  double tol = j.value("tolerance", 1e-9);
  MatrixGroupData out;
  out.group = std::make_shared<FiniteGroup>(FiniteGroup::from_generators(gens, tol));
  out.group->set_name(j.value("name", std::string("matrix group")));
  if (!j.contains("irreps")) return out;

  auto classes = out.group->conjugacy_classes();
  std::vector<int> class_of(out.group->order(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t e : classes[c]) class_of[e] = static_cast<int>(c);
  // file class k -> group class
  std::vector<int> file_to_group;
  std::vector<bool> covered(classes.size(), false);
  for (const auto& c : j.at("classes")) {
    auto idx = out.group->find(json_matrix(c.at("representative")));
    if (!idx) throw std::invalid_argument("class representative is not a group element");
    int gc = class_of[*idx];
    if (covered[gc]) throw std::invalid_argument("two class representatives are conjugate");
    covered[gc] = true;
    file_to_group.push_back(gc);
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw std::invalid_argument("class list does not cover every conjugacy class");
  for (const auto& ir : j.at("irreps")) {
    IrrepData irr;
    irr.label = ir.at("label").get<std::string>();
    irr.dim = ir.at("dim").get<int>();
    const auto& chi = ir.at("character");
    if (chi.size() != file_to_group.size())
      throw std::invalid_argument("character of '" + irr.label + "' has wrong length");
    irr.character.assign(out.group->order(), 0.0);
    for (std::size_t k = 0; k < chi.size(); ++k)
      for (std::size_t e : classes[file_to_group[k]]) irr.character[e] = json_number(chi[k]);
    out.irreps.push_back(std::move(irr));
  }
  return out;
}

MatrixGroupData load_matrix_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix_group(ss.str());
}

}  // namespace symsos
