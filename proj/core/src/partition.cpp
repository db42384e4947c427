#include "glnq/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace glnq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::single_row(int n) {
  if (n < 0) throw std::invalid_argument("negative row length");
  return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

Partition Partition::single_column(int n) {
  if (n < 0) throw std::invalid_argument("negative column length");
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::n_stat() const {
  int acc = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) acc += static_cast<int>(i) * parts_[i];
  return acc;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> cols(static_cast<std::size_t>(parts_[0]), 0);
  for (int part : parts_) {
    for (int j = 0; j < part; ++j) cols[static_cast<std::size_t>(j)] += 1;
  }
  return Partition(std::move(cols));
}

std::vector<int> Partition::hook_lengths() const {
  std::vector<int> hooks;
  Partition conj = conjugate();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    for (int j = 0; j < parts_[i]; ++j) {
      int arm = parts_[i] - j - 1;
      int leg = conj.parts()[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      hooks.push_back(arm + leg + 1);
    }
  }
  return hooks;
}

std::vector<int> Partition::part_multiplicities() const {
  std::vector<int> mult(parts_.empty() ? 1 : static_cast<std::size_t>(parts_[0]) + 1, 0);
  for (int part : parts_) mult[static_cast<std::size_t>(part)] += 1;
  return mult;
}

Int Partition::sym_centralizer() const {
  Int z = 1;
  std::vector<int> mult = part_multiplicities();
  for (std::size_t value = 1; value < mult.size(); ++value) {
    for (int k = 0; k < mult[value]; ++k) {
      z *= Int(value) * Int(k + 1);
    }
  }
  return z;
}

RatFun Partition::sym_centralizer_deformed(const RatFun& t) const {
  RatFun z{Rat(sym_centralizer())};
  for (int part : parts_) {
    z /= RatFun(1) - t.pow(part);
  }
  return z;
}

Partition Partition::rest() const {
  if (parts_.empty()) return {};
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

bool Partition::is_column() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

Composition staircase_bounds(const Partition& lambda) {
  const int len = lambda.length();
  Composition bounds(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    bounds[static_cast<std::size_t>(i)] = lambda.parts()[static_cast<std::size_t>(i)] + (len - 1 - i) + 1;
  }
  return bounds;
}

SignedPartition straighten(const Composition& alpha) {
  const int len = static_cast<int>(alpha.size());
  std::vector<int> gamma(alpha.size());
  for (int i = 0; i < len; ++i) {
    gamma[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(i)] + (len - 1 - i);
    if (gamma[static_cast<std::size_t>(i)] < 0) return {};
  }

  // Sort descending, tracking the permutation; parity from its cycle count.
  std::vector<int> order(alpha.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&gamma](int a, int b) {
    return gamma[static_cast<std::size_t>(a)] > gamma[static_cast<std::size_t>(b)];
  });
  for (int i = 0; i + 1 < len; ++i) {
    if (gamma[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] ==
        gamma[static_cast<std::size_t>(order[static_cast<std::size_t>(i + 1)])]) {
      return {};
    }
  }
  int cycles = 0;
  std::vector<bool> seen(alpha.size(), false);
  for (int i = 0; i < len; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = order[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
    }
  }
  int sign = ((len - cycles) % 2 == 0) ? 1 : -1;

  std::vector<int> parts;
  parts.reserve(alpha.size());
  for (int i = 0; i < len; ++i) {
    int value = gamma[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] - (len - 1 - i);
    if (value != 0) parts.push_back(value);
  }
  return {sign, Partition(std::move(parts))};
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<Partition> all;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      all.emplace_back(current);
      return;
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
      current.push_back(next);
      self(self, remaining - next, next);
      current.pop_back();
    }
  };
  recurse(recurse, n, n);
  return all;
}

}  // namespace glnq
