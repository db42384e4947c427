#include "glnq/mnrule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "glnq/multipoly.hpp"

namespace glnq {

namespace {

/// One step of the class recursion: strips mu_1, forms every child label
/// from absorption choices and single-row placements, and feeds the signed
/// children to `inner` (the recursive engine call, or the degree formula
/// when the remaining class is a column).
RatFun mn_step(const ColoredPattern& label, const Partition& mu,
               const std::function<RatFun(const ColoredPattern&)>& inner) {
  if (mu.empty()) return label.empty() ? RatFun(1) : RatFun();
  const int mu1 = mu.parts()[0];
  const auto& entries = label.entries();

  RatFun acc;
  std::map<int, std::vector<RowPlacement>> placements_by_weight;

  for_each_tau(label, [&](const std::vector<Composition>& taus) {
    int absorbed = 0;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      int sum = 0;
      for (int t : taus[e]) sum += t;
      absorbed += entries[e].degree * sum;
    }
    const int row_weight = absorbed - mu1;
    if (row_weight < 0) return;  // Q* of positive index annihilates the vacuum

    RatFun b_product(1);
    for (std::size_t e = 0; e < entries.size(); ++e) {
      for (int t : taus[e]) b_product *= b_factor(entries[e].degree, t);
    }

    auto [pl_it, inserted] = placements_by_weight.try_emplace(row_weight);
    if (inserted) pl_it->second = enumerate_single_rows(row_weight, label);

    for (const RowPlacement& placement : pl_it->second) {
      int sign = 1;
      std::vector<PatternEntry> child;
      for (std::size_t e = 0; e < entries.size() && sign != 0; ++e) {
        Composition sequence;
        sequence.reserve(taus[e].size() + 1);
        for (std::size_t r = 0; r < taus[e].size(); ++r) {
          sequence.push_back(entries[e].parts.parts()[r] - taus[e][r]);
        }
        if (placement.named_rows[e] > 0) sequence.push_back(placement.named_rows[e]);
        SignedPartition straightened = straighten(sequence);
        sign *= straightened.sign;
        if (sign != 0 && !straightened.partition.empty()) {
          child.push_back({entries[e].degree, straightened.partition});
        }
      }
      if (sign == 0) continue;
      for (const auto& [d, m] : placement.anonymous_rows) {
        child.push_back({d, Partition::single_row(m)});
      }
      RatFun value = inner(ColoredPattern(std::move(child)));
      if (value.is_zero()) continue;
      acc += b_product * placement.multiplicity * RatFun(sign) * value;
    }
  });

  RatFun front = RatFun::q_power(mu.weight());
  if (mu1 % 2 != 0) front = -front;
  return front * acc;
}

}  // namespace

RatFun b_factor(int degree, int absorbed) {
  if (absorbed == 1) return RatFun(-1);
  return RatFun::q_power(-degree) - RatFun(1);
}

RatFun CharEngine::value(const ColoredPattern& label, const Partition& mu) {
  if (label.weight() != mu.weight()) {
    throw std::invalid_argument("label weight and class weight disagree");
  }
  const std::string key = memo_key(label, mu);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      ++hits_;
      return it->second;
    }
  }
  RatFun result = compute(label, mu);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    ++evaluations_;
    memo_.emplace(key, result);
  }
  return result;
}

RatFun CharEngine::compute(const ColoredPattern& label, const Partition& mu) {
  return mn_step(label, mu,
                 [this, &mu](const ColoredPattern& child) { return value(child, mu.rest()); });
}

std::string CharEngine::memo_key(const ColoredPattern& label, const Partition& mu) {
  std::ostringstream out;
  for (std::size_t e = 0; e < label.entries().size(); ++e) {
    if (e > 0) out << '|';
    out << label.entries()[e].degree << ':';
    const auto& parts = label.entries()[e].parts.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out << ',';
      out << parts[i];
    }
  }
  out << '@';
  const auto& parts = mu.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out << ',';
    out << parts[i];
  }
  return out.str();
}

std::pair<ColoredPattern, Partition> CharEngine::parse_memo_key(const std::string& key) {
  auto parse_ints = [](const std::string& text) {
    std::vector<int> values;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      std::size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("bad integer in memo key");
      values.push_back(value);
    }
    return values;
  };

  auto at = key.find('@');
  if (at == std::string::npos) throw std::invalid_argument("memo key lacks '@'");
  std::vector<PatternEntry> entries;
  const std::string label_part = key.substr(0, at);
  if (!label_part.empty()) {
    std::istringstream in(label_part);
    std::string entry_text;
    while (std::getline(in, entry_text, '|')) {
      auto colon = entry_text.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("memo key entry lacks ':'");
      int degree = std::stoi(entry_text.substr(0, colon));
      entries.push_back({degree, Partition(parse_ints(entry_text.substr(colon + 1)))});
    }
  }
  return {ColoredPattern(std::move(entries)), Partition(parse_ints(key.substr(at + 1)))};
}

void CharEngine::preload(const std::string& key, const RatFun& value) {
  parse_memo_key(key);  // validates shape
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(key, value);
}

std::map<std::string, RatFun> CharEngine::memo_snapshot() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_;
}

std::size_t CharEngine::memo_size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.size();
}

std::uint64_t CharEngine::memo_hits() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return hits_;
}

std::uint64_t CharEngine::evaluations() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return evaluations_;
}

RatFun steinberg_value(const ClassType& class_type) {
  int length_sum = 0;
  for (const PatternEntry& e : class_type.entries()) {
    if (!e.parts.is_column()) return RatFun();
    length_sum += e.parts.length();
  }
  RatFun value = RatFun::q_power(class_type.n_stat());
  if ((class_type.weight() - length_sum) % 2 != 0) value = -value;
  return value;
}

RatFun character_degree(const ColoredPattern& label) {
  const int n = label.weight();
  RatFun degree(1);
  for (int i = 1; i <= n; ++i) {
    degree *= RatFun(PolyQ::monomial(i) - PolyQ(Rat(1)));
  }
  for (const PatternEntry& e : label.entries()) {
    degree *= RatFun::q_power(e.degree * e.parts.conjugate().n_stat());
    for (int hook : e.parts.hook_lengths()) {
      degree /= RatFun(PolyQ::monomial(e.degree * hook) - PolyQ(Rat(1)));
    }
  }
  return degree;
}

RatFun hook_value(const ColoredPattern& label, int k) {
  const int n = label.weight();
  if (k < 1 || k > n) throw std::invalid_argument("hook arm length out of range");
  std::vector<int> parts{k};
  parts.insert(parts.end(), static_cast<std::size_t>(n - k), 1);
  return mn_step(label, Partition(std::move(parts)),
                 [](const ColoredPattern& child) { return character_degree(child); });
}

namespace {

/// e_m(w_0^d, ..., w_{r-1}^d) over the given box.
TruncatedMultiPoly elementary_in_powers(const ExponentBox& box, int r, int m, int d) {
  TruncatedMultiPoly result(box);
  std::vector<int> picked;
  auto recurse = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      std::vector<int> exps(box.size(), 0);
      for (int i : picked) exps[static_cast<std::size_t>(i)] = d;
      result.add_term(exps, RatFun(1));
      return;
    }
    for (int i = start; i <= r - left; ++i) {
      picked.push_back(i);
      self(self, i + 1, left - 1);
      picked.pop_back();
    }
  };
  recurse(recurse, 0, m);
  return result;
}

/// Kernel shared by the closed-form row evaluators:
/// q^{n(mu)} prod_{i<j} (w_i - w_j)/(w_i - q^{-1} w_j)
///         * prod_i prod_rows (1 - (-w_i)^{d} z_row),
/// extracted at w^mu prod z_row^{m_row}. The z variables separate: the
/// z_row^{m_row} coefficient of each row's product is
/// (-1)^{(d+1) m} e_m(w_1^d, ..., w_r^d), so only the w variables are
/// expanded.
RatFun row_kernel_coefficient(const std::vector<std::pair<int, int>>& rows, const Partition& mu) {
  const int r = mu.length();
  const int order = mu.weight();
  int colored_total = 0;
  int sign = 1;
  for (const auto& [d, m] : rows) {
    colored_total += d * m;
    if ((d + 1) * m % 2 != 0) sign = -sign;
  }

  ExponentBox box;
  box.lower.assign(static_cast<std::size_t>(r), 0);
  box.upper.assign(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i) {
    box.lower[static_cast<std::size_t>(i)] = mu.parts()[static_cast<std::size_t>(i)] -
                                             order * (r - 1) - colored_total;
    box.upper[static_cast<std::size_t>(i)] = mu.parts()[static_cast<std::size_t>(i)] +
                                             order * (r - 1) + colored_total;
  }

  std::vector<TruncatedMultiPoly> factors;
  for (const auto& [d, m] : rows) {
    if (m > r) return RatFun();  // e_m of r variables vanishes
    factors.push_back(elementary_in_powers(box, r, m, d));
  }
  // Factor order matters only for speed: grouping by the smaller index
  // freezes w_0, then w_1, ... as pruning proceeds.
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      factors.push_back(hl_transfer_factor(box, static_cast<std::size_t>(i), static_cast<std::size_t>(j), order));
    }
  }

  std::vector<int> target(mu.parts().begin(), mu.parts().end());
  return RatFun(sign) * RatFun::q_power(mu.n_stat()) * staged_coefficient(box, factors, target);
}

}  // namespace

RatFun single_row_value(int m, int d, const Partition& mu) {
  if (m <= 0 || d <= 0) throw std::invalid_argument("row length and degree must be positive");
  if (mu.weight() != m * d) throw std::invalid_argument("class weight must equal m * d");
  if (mu.length() < m) return RatFun();  // fewer class rows than the Schur weight
  return row_kernel_coefficient({{d, m}}, mu);
}

RatFun multi_row_value(const std::vector<std::pair<int, int>>& rows, const Partition& mu) {
  int total = 0;
  for (const auto& [d, m] : rows) {
    if (d <= 0 || m <= 0) throw std::invalid_argument("rows need positive degree and length");
    total += d * m;
  }
  if (total != mu.weight()) throw std::invalid_argument("rows weight must equal class weight");
  return row_kernel_coefficient(rows, mu);
}

RatFun single_column_value(const Partition& lambda, int d, int n) {
  if (d <= 0) throw std::invalid_argument("degree must be positive");
  if (n != lambda.weight() * d) throw std::invalid_argument("class weight must equal |lambda| * d");
  if (d == 1) {
    if (!lambda.is_column()) return RatFun();
    return RatFun((lambda.weight() + n) % 2 == 0 ? 1 : -1);
  }

  // The z^n coefficient of prod_i (1 - (-z)^d w_i) picks n/d of the l
  // factors: (-1)^{(d+1) m} e_m(w_1, ..., w_l) with m = n/d = |lambda|.
  const int l = lambda.length();
  const int m = lambda.weight();
  if (m > l) return RatFun();
  ExponentBox box;
  box.lower.assign(static_cast<std::size_t>(l), 0);
  box.upper.assign(static_cast<std::size_t>(l), 0);
  for (int i = 0; i < l; ++i) {
    box.lower[static_cast<std::size_t>(i)] = lambda.parts()[static_cast<std::size_t>(i)] - l - 1;
    box.upper[static_cast<std::size_t>(i)] = lambda.parts()[static_cast<std::size_t>(i)] + l + 1;
  }

  std::vector<TruncatedMultiPoly> factors{elementary_in_powers(box, l, m, 1)};
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      factors.push_back(schur_transfer_factor(box, static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  }

  std::vector<int> target(lambda.parts().begin(), lambda.parts().end());
  RatFun sign((d + 1) * m % 2 == 0 ? 1 : -1);
  return sign * staged_coefficient(box, factors, target);
}

namespace {

/// Nonnegative integer vectors of the given length summing to total.
void for_each_weak_composition(int total, int length, std::vector<int>& scratch,
                               const std::function<void(const std::vector<int>&)>& visit) {
  if (length == 0) {
    if (total == 0) visit(scratch);
    return;
  }
  for (int first = 0; first <= total; ++first) {
    scratch.push_back(first);
    for_each_weak_composition(total - first, length - 1, scratch, visit);
    scratch.pop_back();
  }
}

bool is_partition_shape(const Composition& alpha) {
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0) return false;
    if (i > 0 && alpha[i] > alpha[i - 1]) return false;
  }
  return true;
}

RatFun peel_coefficient(int total, int positive_parts) {
  return RatFun::q_power(-total) * (RatFun(1) - RatFun::q()).pow(positive_parts);
}

}  // namespace

RatFun c_coefficient(const Composition& alpha, int m, int d) {
  if (m < 0 || d <= 0) throw std::invalid_argument("c_coefficient needs m >= 0, d >= 1");

  if (m == 0) {
    if (alpha.empty()) return RatFun(1);
    const int lead = alpha[0];
    if (-lead < 0) return RatFun();
    RatFun acc;
    std::vector<int> beta;
    for_each_weak_composition(-lead, static_cast<int>(alpha.size()) - 1, beta,
                              [&](const std::vector<int>& b) {
      Composition next(alpha.begin() + 1, alpha.end());
      int positive = 0;
      for (std::size_t i = 0; i < b.size(); ++i) {
        next[i] -= b[i];
        positive += b[i] > 0 ? 1 : 0;
      }
      RatFun tail = c_coefficient(next, 0, d);
      if (!tail.is_zero()) acc += peel_coefficient(-lead, positive) * tail;
    });
    return acc;
  }

  if (alpha.empty()) return RatFun();  // e_m of no variables

  if (is_partition_shape(alpha)) {
    // The row lands on the leading position.
    const int lead = alpha[0];
    if (lead > d) return RatFun();
    RatFun acc;
    std::vector<int> gamma;
    for_each_weak_composition(d - lead, static_cast<int>(alpha.size()) - 1, gamma,
                              [&](const std::vector<int>& g) {
      Composition next(alpha.begin() + 1, alpha.end());
      int positive = 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        next[i] -= g[i];
        positive += g[i] > 0 ? 1 : 0;
      }
      RatFun tail = c_coefficient(next, m - 1, d);
      if (!tail.is_zero()) acc += peel_coefficient(d - lead, positive) * tail;
    });
    return acc;
  }

  if (alpha.size() > 2) {
    throw std::invalid_argument(
        "c_coefficient: non-monotone sequences are supported up to length 2");
  }

  // Length-2 non-partition sequence: the row may land on either position
  // with a positive target exponent; the single free geometric order is
  // fixed by that exponent.
  RatFun acc;
  const int a1 = alpha[0];
  const int a2 = alpha[1];
  if (a1 > 0) {
    int g2 = d - a1;
    if (g2 >= 0) {
      RatFun tail = c_coefficient({a2 - g2}, m - 1, d);
      if (!tail.is_zero()) acc += peel_coefficient(g2, g2 > 0 ? 1 : 0) * tail;
    }
  }
  if (a2 > 0) {
    int g1 = a2 - d;
    if (g1 >= 0) {
      RatFun tail = c_coefficient({a1 + g1}, m - 1, d);
      if (!tail.is_zero()) acc += peel_coefficient(g1, g1 > 0 ? 1 : 0) * tail;
    }
  }
  return acc;
}

}  // namespace glnq
