#pragma once

#include <compare>
#include <vector>

#include "glnq/ratfun.hpp"

namespace glnq {

/// Integer partition: weakly decreasing strictly positive parts.
/// The empty partition is allowed and has weight 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  static Partition single_row(int n);     // (n); n = 0 gives the empty partition
  static Partition single_column(int n);  // (1^n)

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int part(int index) const { return parts_.at(static_cast<std::size_t>(index)); }

  /// n(lambda) = sum_i (i-1) lambda_i.
  int n_stat() const;
  Partition conjugate() const;
  /// Hook lengths of all cells, row by row.
  std::vector<int> hook_lengths() const;
  /// Multiplicity of each part value i >= 1 (index 0 unused).
  std::vector<int> part_multiplicities() const;
  /// z_lambda = prod_i i^{m_i} m_i!, the symmetric-group centralizer order.
  Int sym_centralizer() const;
  /// z_lambda(t) = z_lambda * prod_i 1/(1 - t^{lambda_i}) for a rational-function t.
  RatFun sym_centralizer_deformed(const RatFun& t) const;

  /// Partition with the first part removed.
  Partition rest() const;
  bool is_column() const;  // all parts equal 1 (vacuously true when empty)

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Raw operator index sequence; entries may be zero or negative.
using Composition = std::vector<int>;

/// parts_i + (length - i) + 1: the strictly decreasing upper bounds for the
/// per-row absorption indices in the character recursion.
Composition staircase_bounds(const Partition& lambda);

/// Straightening result: zero, or a sign together with a partition.
struct SignedPartition {
  int sign = 0;  // 0 encodes the zero result; otherwise +1 or -1
  Partition partition;

  bool is_zero() const { return sign == 0; }

  friend bool operator==(const SignedPartition& a, const SignedPartition& b) {
    return a.sign == b.sign && (a.sign == 0 || a.partition == b.partition);
  }
};

/// Normalizes an index sequence of row operators into +/- a partition or
/// zero via the determinant rule: gamma_i = alpha_i + (length - i) must be
/// distinct and nonnegative, and sorting gamma in decreasing order
/// contributes the sign of the permutation used.
SignedPartition straighten(const Composition& alpha);

/// All partitions of n, in decreasing lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

}  // namespace glnq
