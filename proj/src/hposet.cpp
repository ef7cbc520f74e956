#include "symsos/hposet.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace symsos {

const char* to_string(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::Certified: return "Certified";
    case EdgeStatus::RefutedByPoint: return "RefutedByPoint";
    case EdgeStatus::Unknown: return "Unknown";
  }
  return "?";
}

SparsePoly h_difference(const Partition& lambda, const Partition& mu, int n, bool squared) {
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("partitions differ in weight");
  SparsePoly g = term_normalize(basis_poly(SymBasis::h, mu, n)) -
                 term_normalize(basis_poly(SymBasis::h, lambda, n));
  return squared ? substitute_squares(g) : g;
}

namespace {

// Nonnegative rational point with D < 0, searched over a small grid then at random.
bool refute(const SparsePoly& D, int n, int samples, unsigned long long seed,
            std::vector<Rational>& point, Rational& value) {
  std::vector<int> x(n, 0);
  std::vector<Rational> p(n);
  while (true) {
    int i = 0;
    while (i < n && x[i] == 3) x[i++] = 0;
    if (i == n) break;
    ++x[i];
    for (int k = 0; k < n; ++k) p[k] = x[k];
    Rational v = eval(D, p);
    if (v < 0) {
      point = p;
      value = v;
      return true;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(0, 20), den(1, 10);
  for (int s = 0; s < samples; ++s) {
    for (int k = 0; k < n; ++k) {
      p[k] = Rational(num(rng), den(rng));
      p[k].canonicalize();
    }
    Rational v = eval(D, p);
    if (v < 0) {
      point = p;
      value = v;
      return true;
    }
  }
  return false;
}

}  // namespace

EdgeVerdict certify_h_pair(const Partition& lambda, const Partition& mu, int n,
                           const HPairOptions& opts) {
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("partitions differ in weight");
  if (n < 1) throw std::invalid_argument("n must be positive");
  EdgeVerdict v;
  v.lambda = lambda;
  v.mu = mu;
  v.n_used = n;
  v.dominance = dominance(lambda, mu);
  SparsePoly g = h_difference(lambda, mu, n);
  if (g.is_zero()) {
    CertifyResult r = certify_symmetric(g, opts.certify);
    v.status = EdgeStatus::Certified;
    v.certificate = r.certificate;
    return v;
  }
  bool tried = false;
  if (opts.degree_cap <= 0 || g.degree() <= opts.degree_cap) {
    tried = true;
    CertifyResult r = certify_symmetric(g, opts.certify);
    if (r.status == CertifyStatus::Feasible && r.certificate) {
      VerifyReport rep = verify(g, *r.certificate);
      v.residual = rep.residual;
      if (rep.ok(1e-7)) {
        v.status = EdgeStatus::Certified;
        v.certificate = std::move(r.certificate);
        return v;
      }
      v.message = "certificate failed re-verification";
    } else {
      v.message = std::string("SOS ") + to_string(r.status);
    }
  } else {
    v.message = "degree above cap";
  }
  std::vector<Rational> pt;
  Rational val;
  SparsePoly D = h_difference(lambda, mu, n, false);
  if (refute(D, n, opts.refute_samples, opts.seed, pt, val)) {
    v.status = EdgeStatus::RefutedByPoint;
    v.point = pt;
    v.point_value = val;
  } else if (!tried) {
    v.status = EdgeStatus::Unknown;
  }
  return v;
}

std::vector<std::size_t> transitive_reduction(const std::vector<Partition>& nodes,
                                              const std::vector<EdgeVerdict>& verdicts) {
  const std::size_t N = nodes.size();
  auto index = [&](const Partition& p) {
    auto it = std::find(nodes.begin(), nodes.end(), p);
    if (it == nodes.end()) throw std::invalid_argument("verdict refers to an unknown node");
    return static_cast<std::size_t>(it - nodes.begin());
  };
  std::vector<std::vector<char>> reach(N, std::vector<char>(N, 0));
  for (const auto& v : verdicts)
    if (v.status == EdgeStatus::Certified) reach[index(v.lambda)][index(v.mu)] = 1;
  auto direct = reach;
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t i = 0; i < N; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < N; ++j)
          if (reach[k][j]) reach[i][j] = 1;
  std::vector<std::size_t> keep;
  for (std::size_t e = 0; e < verdicts.size(); ++e) {
    const auto& v = verdicts[e];
    if (v.status != EdgeStatus::Certified) continue;
    std::size_t i = index(v.lambda), j = index(v.mu);
    if (i == j) continue;
    bool implied = false;
    for (std::size_t k = 0; k < N && !implied; ++k)
      if (k != i && k != j && reach[i][k] && reach[k][j]) implied = true;
    if (!implied) keep.push_back(e);
  }
  return keep;
}

HPoset build_poset(int weight, int n, const PosetOptions& opts) {
  if (weight < 1) throw std::invalid_argument("weight must be positive");
  HPoset P;
  P.weight = weight;
  P.n = n;
  P.nodes = partitions_of(weight, opts.max_parts);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < P.nodes.size(); ++i)
    for (std::size_t j = 0; j < P.nodes.size(); ++j)
      if (i != j) pairs.emplace_back(i, j);
  if (opts.max_pairs > 0 && static_cast<int>(pairs.size()) > opts.max_pairs)
    pairs.resize(opts.max_pairs);
  P.verdicts.resize(pairs.size());
  auto run = [&](std::size_t k) {
    HPairOptions po = opts.pair;
    po.seed = opts.pair.seed + k;
    P.verdicts[k] = certify_h_pair(P.nodes[pairs[k].first], P.nodes[pairs[k].second], n, po);
  };
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (std::size_t k = 0; k < pairs.size(); ++k) run(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < pairs.size();) run(k);
      });
    for (auto& th : pool) th.join();
  }
  P.hasse = transitive_reduction(P.nodes, P.verdicts);
  return P;
}

std::string export_dot(const std::vector<EdgeVerdict>& verdicts) {
  std::set<Partition> nodes;
  for (const auto& v : verdicts) {
    nodes.insert(v.lambda);
    nodes.insert(v.mu);
  }
  std::ostringstream os;
  os << "digraph hposet {\n";
  for (const auto& p : nodes) os << "  \"" << p.to_string() << "\";\n";
  for (const auto& v : verdicts) {
    if (v.status != EdgeStatus::Certified || v.lambda == v.mu) continue;
    bool comparable = v.dominance != Dominance::Incomparable;
    os << "  \"" << v.lambda.to_string() << "\" -> \"" << v.mu.to_string() << "\" [color="
       << (comparable ? "black" : "blue") << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string verdicts_json(const std::vector<EdgeVerdict>& verdicts, int indent) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) {
    nlohmann::ordered_json o;
    o["lambda"] = v.lambda.to_string();
    o["mu"] = v.mu.to_string();
    o["dominance"] = to_string(v.dominance);
    o["status"] = to_string(v.status);
    o["n"] = v.n_used;
    if (v.certificate) {
      o["residual"] = v.residual;
      o["squares"] = v.certificate->squares.size();
    }
    if (v.point) {
      std::vector<std::string> pt;
      for (const auto& q : *v.point) pt.push_back(to_string(q));
      o["point"] = pt;
      o["value"] = to_string(v.point_value);
    }
    if (!v.message.empty()) o["message"] = v.message;
    arr.push_back(o);
  }
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["edges"] = arr;
  return j.dump(indent);
}

}  // namespace symsos
