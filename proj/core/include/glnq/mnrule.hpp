#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "glnq/colored.hpp"

namespace glnq {

/// Memoized engine for irreducible character values of GL_n(F_q) on
/// unipotent classes. One recursion step strips the largest class part:
///
///   value(label, mu) = (-1)^{mu_1} q^{|mu|} * sum over per-row absorption
///   choices tau of B(q; tau) * sum over single-row placements rho of
///   multiplicity(rho) * sign(straightening) * value(child label, rest(mu))
///
/// where the per-part factor is B(x; i) = -1 for i = 1 and x^{-1} - 1 for
/// i > 1 with x = q^degree, each entry's child sequence is the entrywise
/// difference parts - tau with the placed row appended, straightened in
/// that order, and choices with absorbed weight below mu_1 drop out.
/// Values depend only on the canonical pattern, so the memo key is
/// (pattern, mu); lookups and inserts are thread-safe and idempotent.
class CharEngine {
 public:
  CharEngine() = default;
  CharEngine(const CharEngine&) = delete;
  CharEngine& operator=(const CharEngine&) = delete;

  /// Throws std::invalid_argument when weight(label) != |mu|.
  RatFun value(const ColoredPattern& label, const Partition& mu);

  static std::string memo_key(const ColoredPattern& label, const Partition& mu);
  /// Inverse of memo_key; throws std::invalid_argument on malformed input.
  static std::pair<ColoredPattern, Partition> parse_memo_key(const std::string& key);

  /// Seeds the memo with an externally computed value (cache loading).
  void preload(const std::string& key, const RatFun& value);
  std::map<std::string, RatFun> memo_snapshot() const;

  std::size_t memo_size() const;
  std::uint64_t memo_hits() const;
  std::uint64_t evaluations() const;

 private:
  RatFun compute(const ColoredPattern& label, const Partition& mu);

  mutable std::mutex mutex_;
  std::map<std::string, RatFun> memo_;
  std::uint64_t hits_ = 0;
  std::uint64_t evaluations_ = 0;
};

/// Per-part recursion factor: -1 for absorbed index 1, q^{-degree} - 1 above.
RatFun b_factor(int degree, int absorbed);

/// Steinberg character value on an arbitrary class type:
/// (-1)^{n - sum_f l(mu(f))} q^{n(mu)} when every entry is a column, else 0.
RatFun steinberg_value(const ClassType& class_type);

/// Degree of the irreducible character with the given label:
/// prod_{i=1..n}(q^i - 1) * prod over entries of
/// q_d^{n(parts')} / prod_cells (q_d^{hook} - 1) with q_d = q^degree.
RatFun character_degree(const ColoredPattern& label);

/// Character value at a hook class (k, 1^{n-k}): one recursion step whose
/// inner values are character degrees. Throws when k is out of range.
RatFun hook_value(const ColoredPattern& label, int k);

/// Single-row label (m) on an orbit of size d, evaluated at mu with
/// |mu| = m * d, by coefficient extraction from
/// q^{n(mu)} prod_{i<j} (w_i - w_j)/(w_i - q^{-1} w_j) * prod_i (1 - (-w_i)^d z).
RatFun single_row_value(int m, int d, const Partition& mu);

/// Single-column-extraction dual: label lambda on an orbit of size d at the
/// regular class (n), n = |lambda| * d, from
/// prod_{i<j} (1 - w_j/w_i) * prod_i (1 - (-z)^d w_i). For d = 1 this is
/// (-1)^{|lambda| + n} when lambda is a column and 0 otherwise.
RatFun single_column_value(const Partition& lambda, int d, int n);

/// Label made of single rows (degree, row) on distinct orbits, any mu with
/// matching weight, via the multi-variable kernel with one z per row.
RatFun multi_row_value(const std::vector<std::pair<int, int>>& rows, const Partition& mu);

/// Kernel coefficients C^m_alpha(q) of e_m(w_1^d, ..., w_r^d) times the
/// Hall-Littlewood Vandermonde factor, computed by the recursions:
/// m = 0 peels the leading exponent through compositions of -alpha_1;
/// m >= 1 on weakly decreasing nonnegative alpha assigns the row to the
/// leading position; m >= 1 on other sequences of length <= 2 sums the row
/// assignment over positions with positive target exponent (longer
/// non-monotone sequences are rejected with std::invalid_argument).
RatFun c_coefficient(const Composition& alpha, int m, int d);

}  // namespace glnq
