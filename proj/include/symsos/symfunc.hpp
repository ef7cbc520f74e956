// Partitions, dominance, and the classical symmetric polynomial bases.
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symsos/polycore.hpp"

namespace symsos {

class Partition {
 public:
  Partition() = default;
  // Parts must be positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  // "5,2,1"; the empty string gives the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  std::string to_string() const;

  // n(lambda) = sum (i-1) lambda_i
  int n_statistic() const;
  Partition conjugate() const;

  bool operator==(const Partition&) const = default;
  // Reverse-lex: larger partitions compare less, so sorting puts (N) first.
  bool operator<(const Partition& o) const;

 private:
  std::vector<int> parts_;
};

enum class Dominance { Less, Greater, Equal, Incomparable };

// How lambda compares to mu: Less means mu strictly dominates lambda.
Dominance dominance(const Partition& lambda, const Partition& mu);
const char* to_string(Dominance d);

// Reverse lexicographic order; max_parts < 0 means unlimited.
std::vector<Partition> partitions_of(int N, int max_parts = -1);

enum class SymBasis { m, e, p, h, s };
SymBasis parse_sym_basis(std::string_view s);
const char* to_string(SymBasis b);

SparsePoly basis_poly(SymBasis kind, const Partition& lambda, int n);

// g / g(1,...,1)
SparsePoly term_normalize(const SparsePoly& g);

// Exponent vectors in the S_n orbit of a partition padded to n entries.
std::vector<Exponent> orbit_exponents(const Partition& lambda, int n);

}  // namespace symsos
