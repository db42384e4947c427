#pragma once

#include <compare>
#include <functional>
#include <utility>
#include <vector>

#include "glnq/partition.hpp"

namespace glnq {

/// One orbit's contribution to a colored pattern: the Frobenius-orbit size
/// together with the partition placed on that orbit.
struct PatternEntry {
  int degree = 1;
  Partition parts;

  friend bool operator==(const PatternEntry& a, const PatternEntry& b) {
    return a.degree == b.degree && a.parts == b.parts;
  }
  friend std::strong_ordering operator<=>(const PatternEntry& a, const PatternEntry& b) {
    if (auto c = a.degree <=> b.degree; c != 0) return c;
    return a.parts <=> b.parts;
  }
};

/// Multiset of (orbit degree, partition) pairs in canonical sorted order.
/// Stands for a character label colored by Frobenius orbits, up to
/// relabeling of orbits of equal degree; unipotent-class values depend on
/// nothing finer. Entries with empty partitions are never stored.
class ColoredPattern {
 public:
  ColoredPattern() = default;
  /// Sorts entries and drops empty ones; throws on nonpositive degrees.
  explicit ColoredPattern(std::vector<PatternEntry> entries);

  const std::vector<PatternEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  int size() const { return static_cast<int>(entries_.size()); }
  /// Colored weight: sum of degree * |parts|.
  int weight() const;
  /// Colored n-statistic: sum of degree * n(parts).
  int n_stat() const;
  /// Number of entries of the given degree.
  int degree_count(int degree) const;

  friend bool operator==(const ColoredPattern& a, const ColoredPattern& b) {
    return a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const ColoredPattern& a, const ColoredPattern& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<PatternEntry> entries_;
};

/// Class type colored by monic irreducible polynomials (degree = deg f),
/// used by the Steinberg evaluator. Same canonical-multiset shape as
/// ColoredPattern but kept as a distinct type: the two sides of the duality
/// are not interchangeable.
class ClassType {
 public:
  ClassType() = default;
  explicit ClassType(std::vector<PatternEntry> entries);

  const std::vector<PatternEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  int weight() const;
  int n_stat() const;

  friend bool operator==(const ClassType& a, const ClassType& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<PatternEntry> entries_;
};

/// Necklace polynomial N_d(q) = (1/d) sum_{e|d} mobius(d/e) (q^e - 1):
/// the number of size-d Frobenius orbits, as an exact polynomial in q.
/// Throws std::invalid_argument for d <= 0.
RatFun orbit_count(int d);

/// Centralizer order a_mu(q) of a unipotent element of Jordan type mu:
/// q^{|mu| + 2 n(mu)} * prod_i phi_{m_i(mu)}(q^{-1}) with
/// phi_m(t) = prod_{j=1..m} (1 - t^j). Reduces to a polynomial.
RatFun centralizer_order(const Partition& mu);

/// Number of actual labels realizing the pattern, as a polynomial in q:
/// product over degrees d of falling(N_d, k_d) divided by the factorials
/// of repeated (degree, partition) entries.
RatFun pattern_label_multiplicity(const ColoredPattern& pattern);

/// All colored patterns of the given weight with entry degrees bounded by
/// max_degree, each exactly once, in canonical increasing order.
std::vector<ColoredPattern> enumerate_patterns(int weight, int max_degree);

/// One absorption choice per entry: a vector of the same length as the
/// entry's partition with components in [1, staircase_bounds(parts)_i].
/// Invokes the visitor once per combination, entries varying fastest last.
void for_each_tau(const ColoredPattern& pattern,
                  const std::function<void(const std::vector<Composition>&)>& visit);

/// A way to distribute single rows of total colored weight w over the
/// ambient orbits: per named support entry an optional row (0 = none),
/// plus a multiset of rows on fresh orbits, weighted by the exact count of
/// label choices (falling factorials of necklace polynomials).
struct RowPlacement {
  std::vector<int> named_rows;                     // aligned with support entries
  std::vector<std::pair<int, int>> anonymous_rows; // (degree, row), sorted
  RatFun multiplicity;
};

/// All placements of single rows with total colored weight `weight` against
/// the given support, in a fixed deterministic order. weight = 0 yields the
/// single empty placement with multiplicity 1.
std::vector<RowPlacement> enumerate_single_rows(int weight, const ColoredPattern& support);

}  // namespace glnq
