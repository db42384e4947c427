#include "glnq/fock.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace glnq {

namespace {

Rat partition_automorphisms(const Partition& kappa) {
  Rat count(1);
  std::vector<int> mult = kappa.part_multiplicities();
  for (std::size_t value = 1; value < mult.size(); ++value) {
    for (int j = 2; j <= mult[value]; ++j) count *= j;
  }
  return count;
}

Partition with_part(const Partition& parts, int n) {
  std::vector<int> next = parts.parts();
  next.insert(std::upper_bound(next.begin(), next.end(), n, std::greater<int>()), n);
  return Partition(std::move(next));
}

Partition without_part(const Partition& parts, int n) {
  std::vector<int> next = parts.parts();
  next.erase(std::find(next.begin(), next.end(), n));
  return Partition(std::move(next));
}

}  // namespace

FockVector FockVector::vacuum_orbit(std::vector<int> channel_degrees) {
  for (int d : channel_degrees) {
    if (d <= 0) throw std::invalid_argument("orbit channel degree must be positive");
  }
  FockVector v(Alphabet::orbit, std::move(channel_degrees));
  v.terms_.emplace(Monomial(v.channel_degrees_.size()), RatFun(1));
  return v;
}

FockVector FockVector::vacuum_f1() {
  FockVector v(Alphabet::f1, {1});
  v.terms_.emplace(Monomial(1), RatFun(1));
  return v;
}

FockVector FockVector::zero_like(const FockVector& shape) {
  return FockVector(shape.alphabet_, shape.channel_degrees_);
}

void FockVector::add_term(const Monomial& monomial, const RatFun& coeff) {
  if (monomial.size() != channel_degrees_.size()) {
    throw std::invalid_argument("monomial channel count mismatch");
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatFun FockVector::coefficient(const Monomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? RatFun() : it->second;
}

FockVector& FockVector::operator+=(const FockVector& other) {
  if (alphabet_ != other.alphabet_ || channel_degrees_ != other.channel_degrees_) {
    throw std::invalid_argument("adding Fock vectors from different spaces");
  }
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

FockVector& FockVector::operator*=(const RatFun& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

int FockVector::max_channel_content(int channel) const {
  int best = 0;
  for (const auto& [m, c] : terms_) {
    best = std::max(best, m[static_cast<std::size_t>(channel)].weight());
  }
  return best;
}

int FockVector::max_degree() const {
  int best = 0;
  for (const auto& [m, c] : terms_) {
    int deg = 0;
    for (std::size_t ch = 0; ch < m.size(); ++ch) deg += channel_degrees_[ch] * m[ch].weight();
    best = std::max(best, deg);
  }
  return best;
}

std::string FockVector::debug_string() const {
  if (terms_.empty()) return "0\n";
  std::ostringstream out;
  for (const auto& [m, c] : terms_) {
    bool wrote = false;
    for (std::size_t ch = 0; ch < m.size(); ++ch) {
      for (int part : m[ch].parts()) {
        out << "p" << part << "(c" << ch << ") ";
        wrote = true;
      }
    }
    if (!wrote) out << "1 ";
    out << ": " << c.to_string() << "\n";
  }
  return out.str();
}

FockVector multiply_power_sum(const FockVector& v, int channel, int n) {
  if (n <= 0) throw std::invalid_argument("power sum index must be positive");
  FockVector result = FockVector::zero_like(v);
  for (const auto& [m, c] : v.terms()) {
    FockVector::Monomial next = m;
    next[static_cast<std::size_t>(channel)] = with_part(next[static_cast<std::size_t>(channel)], n);
    result.add_term(next, c);
  }
  return result;
}

FockVector differentiate_power_sum(const FockVector& v, int channel, int n) {
  if (n <= 0) throw std::invalid_argument("power sum index must be positive");
  FockVector result = FockVector::zero_like(v);
  for (const auto& [m, c] : v.terms()) {
    const Partition& parts = m[static_cast<std::size_t>(channel)];
    int mult = static_cast<int>(std::count(parts.parts().begin(), parts.parts().end(), n));
    if (mult == 0) continue;
    FockVector::Monomial next = m;
    next[static_cast<std::size_t>(channel)] = without_part(parts, n);
    result.add_term(next, c * RatFun(mult));
  }
  return result;
}

FockVector apply_half_vertex(const FockVector& v, HalfVertex mode, int channel,
                             const std::function<RatFun(int)>& weights, int z_power) {
  if (channel < 0 || channel >= v.channel_count()) {
    throw std::invalid_argument("half vertex on unknown channel");
  }
  if (mode == HalfVertex::create && z_power < 0) {
    throw std::invalid_argument("creation half vertex has no negative z powers");
  }
  if (mode == HalfVertex::annihilate && z_power > 0) {
    throw std::invalid_argument("annihilation half vertex has no positive z powers");
  }
  int order = mode == HalfVertex::create ? z_power : -z_power;
  if (order == 0) return v;

  FockVector result = FockVector::zero_like(v);
  for (const Partition& kappa : partitions_of(order)) {
    RatFun coeff(1);
    for (int part : kappa.parts()) coeff *= weights(part);
    coeff /= RatFun(partition_automorphisms(kappa));
    if (coeff.is_zero()) continue;
    FockVector piece = v;
    for (int part : kappa.parts()) {
      piece = mode == HalfVertex::create ? multiply_power_sum(piece, channel, part)
                                         : differentiate_power_sum(piece, channel, part);
      if (piece.is_zero()) break;
    }
    piece *= coeff;
    result += piece;
  }
  return result;
}

FockVector schur_op(const FockVector& v, int channel, int n) {
  const auto create_weights = [](int k) { return RatFun(PolyQ(Rat(1)), PolyQ(Rat(k))); };
  const auto annihilate_weights = [](int) { return RatFun(-1); };
  FockVector result = FockVector::zero_like(v);
  int content = v.max_channel_content(channel);
  for (int b = 0; b <= content; ++b) {
    if (n + b < 0) continue;
    FockVector lowered = apply_half_vertex(v, HalfVertex::annihilate, channel, annihilate_weights, -b);
    if (lowered.is_zero()) continue;
    result += apply_half_vertex(lowered, HalfVertex::create, channel, create_weights, n + b);
  }
  return result;
}

FockVector hl_op(const FockVector& v, int n) {
  if (v.alphabet() != Alphabet::f1) throw std::invalid_argument("hl_op acts on the f1 alphabet");
  const auto create_weights = [](int k) {
    return RatFun(PolyQ::monomial(k) - PolyQ(Rat(1))) * RatFun(Rat(1, static_cast<unsigned long>(k)));
  };
  const auto annihilate_weights = [](int k) { return -RatFun::q_power(-k); };
  FockVector result = FockVector::zero_like(v);
  int content = v.max_channel_content(0);
  for (int b = 0; b <= content; ++b) {
    if (n + b < 0) continue;
    FockVector lowered = apply_half_vertex(v, HalfVertex::annihilate, 0, annihilate_weights, -b);
    if (lowered.is_zero()) continue;
    result += apply_half_vertex(lowered, HalfVertex::create, 0, create_weights, n + b);
  }
  return result;
}

FockVector hl_dual_op(const FockVector& v, int n) {
  if (v.alphabet() != Alphabet::f1) throw std::invalid_argument("hl_dual_op acts on the f1 alphabet");
  const auto create_weights = [](int k) {
    return -(RatFun(1) - RatFun::q_power(-k)) * RatFun(Rat(1, static_cast<unsigned long>(k)));
  };
  const auto annihilate_weights = [](int) { return RatFun(1); };
  FockVector result = FockVector::zero_like(v);
  int content = v.max_channel_content(0);
  // Q*(z) carries z^{-n}; the z^{-n} coefficient pairs creation order a with
  // annihilation order a + n.
  for (int b = std::max(0, n); b <= content; ++b) {
    int a = b - n;
    FockVector lowered = apply_half_vertex(v, HalfVertex::annihilate, 0, annihilate_weights, -b);
    if (lowered.is_zero()) continue;
    result += apply_half_vertex(lowered, HalfVertex::create, 0, create_weights, a);
  }
  return result;
}

FockVector schur_vector(const ColoredPattern& pattern) {
  std::vector<int> degrees;
  degrees.reserve(pattern.entries().size());
  for (const PatternEntry& e : pattern.entries()) degrees.push_back(e.degree);
  FockVector v = FockVector::vacuum_orbit(std::move(degrees));
  for (std::size_t ch = 0; ch < pattern.entries().size(); ++ch) {
    const auto& parts = pattern.entries()[ch].parts.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      v = schur_op(v, static_cast<int>(ch), *it);
    }
  }
  return v;
}

FockVector hl_vector(const Partition& mu) {
  FockVector v = FockVector::vacuum_f1();
  const auto& parts = mu.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    v = hl_op(v, *it);
  }
  return v;
}

FockVector qdual_vector(int n) {
  if (n < 0) throw std::invalid_argument("qdual_vector needs n >= 0");
  const auto create_weights = [](int k) {
    return -(RatFun(1) - RatFun::q_power(-k)) * RatFun(Rat(1, static_cast<unsigned long>(k)));
  };
  return apply_half_vertex(FockVector::vacuum_f1(), HalfVertex::create, 0, create_weights, n);
}

FockVector qdual_power_sum_form(int n) {
  if (n < 0) throw std::invalid_argument("qdual_power_sum_form needs n >= 0");
  FockVector result = FockVector::zero_like(FockVector::vacuum_f1());
  for (const Partition& lambda : partitions_of(n)) {
    FockVector::Monomial monomial{lambda};
    result.add_term(monomial, RatFun(1) / lambda.sym_centralizer_deformed(RatFun::q()));
  }
  result *= RatFun::q_power(-n);
  return result;
}

FockVector convert_f1_to_orbits(const FockVector& v, const ColoredPattern& support) {
  if (v.alphabet() != Alphabet::f1) {
    throw std::invalid_argument("convert_f1_to_orbits needs an f1 vector");
  }
  std::vector<int> degrees;
  degrees.reserve(support.entries().size());
  for (const PatternEntry& e : support.entries()) degrees.push_back(e.degree);

  FockVector result = FockVector::zero_like(FockVector::vacuum_orbit(degrees));
  for (const auto& [m, c] : v.terms()) {
    FockVector acc = FockVector::vacuum_orbit(degrees);
    acc *= c;
    for (int k : m[0].parts()) {
      RatFun factor = RatFun(Rat(k % 2 == 1 ? 1 : -1)) /
                      RatFun(PolyQ::monomial(k) - PolyQ(Rat(1)));
      FockVector replaced = FockVector::zero_like(acc);
      for (std::size_t ch = 0; ch < degrees.size(); ++ch) {
        if (k % degrees[ch] != 0) continue;
        FockVector piece = multiply_power_sum(acc, static_cast<int>(ch), k / degrees[ch]);
        piece *= factor * RatFun(degrees[ch]);
        replaced += piece;
      }
      acc = std::move(replaced);
      if (acc.is_zero()) break;
    }
    result += acc;
  }
  return result;
}

RatFun fock_inner(const FockVector& u, const FockVector& v) {
  if (u.alphabet() != v.alphabet() || u.channel_degrees() != v.channel_degrees()) {
    throw std::invalid_argument("inner product between different alphabets");
  }
  RatFun total;
  const RatFun qinv = RatFun::q_power(-1);
  for (const auto& [m, cu] : u.terms()) {
    RatFun cv = v.coefficient(m);
    if (cv.is_zero()) continue;
    RatFun norm(1);
    if (u.alphabet() == Alphabet::orbit) {
      for (const Partition& parts : m) norm *= RatFun(Rat(parts.sym_centralizer()));
    } else {
      const Partition& parts = m[0];
      norm = parts.sym_centralizer_deformed(qinv) * RatFun::q_power(-parts.weight());
    }
    total += cu * cv * norm;
  }
  return total;
}

RatFun character_matrix_element(const ColoredPattern& label, const Partition& mu) {
  if (label.weight() != mu.weight()) {
    throw std::invalid_argument("label weight and class weight disagree");
  }
  FockVector schur = schur_vector(label);
  FockVector hl = convert_f1_to_orbits(hl_vector(mu), label);
  return RatFun::q_power(mu.n_stat()) * fock_inner(schur, hl);
}

FockVector qdual_projected_power_sums(int n, const ColoredPattern& support) {
  std::vector<int> degrees;
  for (const PatternEntry& e : support.entries()) degrees.push_back(e.degree);
  FockVector result = FockVector::zero_like(FockVector::vacuum_orbit(degrees));

  FockVector::Monomial monomial(degrees.size());
  auto recurse = [&](auto&& self, std::size_t ch, int remaining) -> void {
    if (ch == degrees.size()) {
      if (remaining != 0) return;
      RatFun z(1);
      for (const Partition& parts : monomial) z *= RatFun(Rat(parts.sym_centralizer()));
      result.add_term(monomial, RatFun(1) / z);
      return;
    }
    for (int w = 0; w * degrees[ch] <= remaining; ++w) {
      for (const Partition& lambda : partitions_of(w)) {
        monomial[ch] = lambda;
        self(self, ch + 1, remaining - w * degrees[ch]);
      }
    }
    monomial[ch] = Partition();
  };
  recurse(recurse, 0, n);

  result *= RatFun(-1).pow(n) * RatFun::q_power(-n);
  return result;
}

FockVector qdual_projected_schur_rows(int n, const ColoredPattern& support) {
  std::vector<int> degrees;
  for (const PatternEntry& e : support.entries()) degrees.push_back(e.degree);
  FockVector result = FockVector::zero_like(FockVector::vacuum_orbit(degrees));
  const auto h_weights = [](int k) { return RatFun(PolyQ(Rat(1)), PolyQ(Rat(k))); };

  auto recurse = [&](auto&& self, std::size_t ch, int remaining, const FockVector& acc) -> void {
    if (ch == degrees.size()) {
      if (remaining == 0) result += acc;
      return;
    }
    for (int row = 0; row * degrees[ch] <= remaining; ++row) {
      // Multiplying by the one-row Schur function h_row on this channel.
      FockVector next = apply_half_vertex(acc, HalfVertex::create, static_cast<int>(ch), h_weights, row);
      self(self, ch + 1, remaining - row * degrees[ch], next);
    }
  };
  recurse(recurse, 0, n, FockVector::vacuum_orbit(degrees));

  result *= RatFun(-1).pow(n) * RatFun::q_power(-n);
  return result;
}

}  // namespace glnq
