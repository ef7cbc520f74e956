// Orthant inequalities between term-normalized complete homogeneous
// symmetric polynomials, certified by SOS after x -> x^2.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symsos/certify.hpp"
#include "symsos/symfunc.hpp"

namespace symsos {

enum class EdgeStatus { Certified, RefutedByPoint, Unknown };
const char* to_string(EdgeStatus s);

// Claim under test: H_mu >= H_lambda on the nonnegative orthant in n_used variables.
struct EdgeVerdict {
  Partition lambda, mu;
  Dominance dominance = Dominance::Incomparable;  // of lambda relative to mu
  EdgeStatus status = EdgeStatus::Unknown;
  std::optional<SosCertificate> certificate;
  double residual = 0;
  std::optional<std::vector<Rational>> point;  // H_mu - H_lambda < 0 there
  Rational point_value;
  int n_used = 3;
  std::string message;
};

struct HPairOptions {
  CertifyOptions certify;
  int refute_samples = 2000;
  unsigned long long seed = 0;
  int degree_cap = 0;  // skip SOS problems above this degree; 0 means no cap
};

// (H_mu - H_lambda)(x_1^2, ..., x_n^2)
SparsePoly h_difference(const Partition& lambda, const Partition& mu, int n, bool squared = true);

EdgeVerdict certify_h_pair(const Partition& lambda, const Partition& mu, int n,
                           const HPairOptions& opts = {});

struct PosetOptions {
  HPairOptions pair;
  int jobs = 1;
  int max_pairs = 0;  // 0 means all ordered pairs
  int max_parts = -1;
};

struct HPoset {
  int weight = 0;
  int n = 3;
  std::vector<Partition> nodes;
  std::vector<EdgeVerdict> verdicts;  // ordered pairs, lambda != mu
  std::vector<std::size_t> hasse;     // indices of Certified verdicts kept by the reduction
};

HPoset build_poset(int weight, int n, const PosetOptions& opts = {});
// Indices of Certified verdicts that are not implied by a longer chain.
std::vector<std::size_t> transitive_reduction(const std::vector<Partition>& nodes,
                                              const std::vector<EdgeVerdict>& verdicts);

std::string export_dot(const std::vector<EdgeVerdict>& verdicts);
std::string verdicts_json(const std::vector<EdgeVerdict>& verdicts, int indent = 2);

}  // namespace symsos
