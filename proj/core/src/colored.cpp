#include "glnq/colored.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace glnq {

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

RatFun falling_factorial(const RatFun& x, int k) {
  RatFun product(1);
  for (int j = 0; j < k; ++j) {
    product *= x - RatFun(j);
  }
  return product;
}

Rat factorial(int k) {
  Rat f(1);
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

std::vector<PatternEntry> checked_entries(std::vector<PatternEntry> entries) {
  std::erase_if(entries, [](const PatternEntry& e) { return e.parts.empty(); });
  for (const PatternEntry& e : entries) {
    if (e.degree <= 0) throw std::invalid_argument("orbit degree must be positive");
  }
  std::sort(entries.begin(), entries.end());
  return entries;
}

int entries_weight(const std::vector<PatternEntry>& entries) {
  int w = 0;
  for (const PatternEntry& e : entries) w += e.degree * e.parts.weight();
  return w;
}

int entries_n_stat(const std::vector<PatternEntry>& entries) {
  int s = 0;
  for (const PatternEntry& e : entries) s += e.degree * e.parts.n_stat();
  return s;
}

/// Divides the ordered-choice count by the factorial of each run of equal
/// values, turning ordered assignments into multiset counts.
template <typename Iter>
Rat repetition_factor(Iter first, Iter last) {
  Rat factor(1);
  auto run_begin = first;
  for (auto it = first; it != last; ++it) {
    auto next = std::next(it);
    if (next == last || !(*next == *it)) {
      factor *= factorial(static_cast<int>(std::distance(run_begin, next)));
      run_begin = next;
    }
  }
  return factor;
}

}  // namespace

ColoredPattern::ColoredPattern(std::vector<PatternEntry> entries)
    : entries_(checked_entries(std::move(entries))) {}

int ColoredPattern::weight() const { return entries_weight(entries_); }

int ColoredPattern::n_stat() const { return entries_n_stat(entries_); }

int ColoredPattern::degree_count(int degree) const {
  int count = 0;
  for (const PatternEntry& e : entries_) count += e.degree == degree ? 1 : 0;
  return count;
}

ClassType::ClassType(std::vector<PatternEntry> entries)
    : entries_(checked_entries(std::move(entries))) {}

int ClassType::weight() const { return entries_weight(entries_); }

int ClassType::n_stat() const { return entries_n_stat(entries_); }

RatFun orbit_count(int d) {
  if (d <= 0) throw std::invalid_argument("orbit degree must be positive");
  PolyQ sum;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int mu = mobius(d / e);
    if (mu == 0) continue;
    sum += PolyQ::monomial(e, Rat(mu));
    sum -= PolyQ(Rat(mu));
  }
  return RatFun(sum) * RatFun(Rat(1, static_cast<unsigned long>(d)));
}

RatFun centralizer_order(const Partition& mu) {
  RatFun order = RatFun::q_power(mu.weight() + 2 * mu.n_stat());
  const RatFun qinv = RatFun::q_power(-1);
  std::vector<int> mult = mu.part_multiplicities();
  for (std::size_t value = 1; value < mult.size(); ++value) {
    for (int j = 1; j <= mult[value]; ++j) {
      order *= RatFun(1) - qinv.pow(j);
    }
  }
  return order;
}

RatFun pattern_label_multiplicity(const ColoredPattern& pattern) {
  RatFun count(1);
  const auto& entries = pattern.entries();
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].degree == entries[i].degree) ++j;
    count *= falling_factorial(orbit_count(entries[i].degree), static_cast<int>(j - i));
    count /= RatFun(repetition_factor(entries.begin() + static_cast<std::ptrdiff_t>(i),
                                      entries.begin() + static_cast<std::ptrdiff_t>(j)));
    i = j;
  }
  return count;
}

std::vector<ColoredPattern> enumerate_patterns(int weight, int max_degree) {
  if (weight < 0) throw std::invalid_argument("negative pattern weight");
  if (max_degree <= 0) throw std::invalid_argument("max_degree must be positive");
  std::vector<ColoredPattern> all;
  std::vector<PatternEntry> current;

  auto candidates = [&](int remaining, const PatternEntry* minimum) {
    std::vector<PatternEntry> list;
    for (int d = 1; d <= std::min(max_degree, remaining); ++d) {
      for (int w = 1; w * d <= remaining; ++w) {
        for (const Partition& parts : partitions_of(w)) {
          PatternEntry e{d, parts};
          if (minimum == nullptr || !(e < *minimum)) list.push_back(std::move(e));
        }
      }
    }
    std::sort(list.begin(), list.end());
    return list;
  };

  auto recurse = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      all.emplace_back(current);
      return;
    }
    const PatternEntry* minimum = current.empty() ? nullptr : &current.back();
    for (const PatternEntry& e : candidates(remaining, minimum)) {
      current.push_back(e);
      self(self, remaining - e.degree * e.parts.weight());
      current.pop_back();
    }
  };
  recurse(recurse, weight);
  std::sort(all.begin(), all.end());
  return all;
}

void for_each_tau(const ColoredPattern& pattern,
                  const std::function<void(const std::vector<Composition>&)>& visit) {
  // Flatten (entry, row) pairs into one odometer; each digit runs from 1 to
  // the staircase bound of its row.
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (entry, row)
  std::vector<int> bounds;
  std::vector<Composition> taus(pattern.entries().size());
  for (std::size_t e = 0; e < pattern.entries().size(); ++e) {
    Composition entry_bounds = staircase_bounds(pattern.entries()[e].parts);
    taus[e].assign(entry_bounds.size(), 1);
    for (std::size_t r = 0; r < entry_bounds.size(); ++r) {
      slots.emplace_back(e, r);
      bounds.push_back(entry_bounds[r]);
    }
  }
  while (true) {
    visit(taus);
    std::size_t pos = slots.size();
    while (pos > 0) {
      auto [e, r] = slots[pos - 1];
      if (taus[e][r] < bounds[pos - 1]) {
        ++taus[e][r];
        break;
      }
      taus[e][r] = 1;
      --pos;
    }
    if (pos == 0) break;
  }
}

std::vector<RowPlacement> enumerate_single_rows(int weight, const ColoredPattern& support) {
  if (weight < 0) throw std::invalid_argument("negative row weight");
  std::vector<RowPlacement> placements;
  const auto& entries = support.entries();
  std::vector<int> named(entries.size(), 0);
  std::vector<std::pair<int, int>> anonymous;

  auto finalize = [&]() {
    RatFun multiplicity(1);
    // Group anonymous rows by degree; they occupy distinct fresh orbits.
    for (std::size_t i = 0; i < anonymous.size();) {
      std::size_t j = i;
      while (j < anonymous.size() && anonymous[j].first == anonymous[i].first) ++j;
      int degree = anonymous[i].first;
      RatFun available = orbit_count(degree) - RatFun(support.degree_count(degree));
      multiplicity *= falling_factorial(available, static_cast<int>(j - i));
      multiplicity /= RatFun(repetition_factor(anonymous.begin() + static_cast<std::ptrdiff_t>(i),
                                               anonymous.begin() + static_cast<std::ptrdiff_t>(j)));
      i = j;
    }
    placements.push_back(RowPlacement{named, anonymous, multiplicity});
  };

  // Anonymous rows in nondecreasing (degree, row) order form the multiset.
  auto anon = [&](auto&& self, int remaining, std::pair<int, int> minimum) -> void {
    if (remaining == 0) {
      finalize();
      return;
    }
    for (int d = minimum.first; d <= remaining; ++d) {
      int m_start = d == minimum.first ? minimum.second : 1;
      for (int m = m_start; m * d <= remaining; ++m) {
        anonymous.emplace_back(d, m);
        self(self, remaining - m * d, {d, m});
        anonymous.pop_back();
      }
    }
  };

  auto named_rec = [&](auto&& self, std::size_t index, int remaining) -> void {
    if (index == entries.size()) {
      anon(anon, remaining, {1, 1});
      return;
    }
    self(self, index + 1, remaining);  // no row on this entry
    int d = entries[index].degree;
    for (int m = 1; m * d <= remaining; ++m) {
      named[index] = m;
      self(self, index + 1, remaining - m * d);
      named[index] = 0;
    }
  };

  named_rec(named_rec, 0, weight);
  return placements;
}

}  // namespace glnq
