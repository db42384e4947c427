#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "glnq/colored.hpp"

namespace glnq {

/// Which power-sum alphabet a Fock vector lives in. Orbit vectors carry one
/// channel per support entry (two orbits of equal degree are distinct
/// channels); the f1 alphabet has the single channel of the polynomial t - 1.
enum class Alphabet { orbit, f1 };

enum class HalfVertex { create, annihilate };

/// Finite linear combination of colored power-sum monomials with exact
/// rational-function coefficients. A monomial stores, per channel, the
/// multiset of power-sum indices as a partition; no zero coefficient is
/// ever kept.
class FockVector {
 public:
  using Monomial = std::vector<Partition>;  // one partition per channel

  static FockVector vacuum_orbit(std::vector<int> channel_degrees);
  static FockVector vacuum_f1();
  static FockVector zero_like(const FockVector& shape);

  Alphabet alphabet() const { return alphabet_; }
  const std::vector<int>& channel_degrees() const { return channel_degrees_; }
  int channel_count() const { return static_cast<int>(channel_degrees_.size()); }
  const std::map<Monomial, RatFun>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& monomial, const RatFun& coeff);
  RatFun coefficient(const Monomial& monomial) const;

  FockVector& operator+=(const FockVector& other);
  FockVector& operator*=(const RatFun& scalar);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator*(FockVector a, const RatFun& s) { return a *= s; }
  friend FockVector operator*(const RatFun& s, FockVector a) { return a *= s; }

  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.alphabet_ == b.alphabet_ && a.channel_degrees_ == b.channel_degrees_ &&
           a.terms_ == b.terms_;
  }

  /// Largest sum of power-sum indices in the given channel over all
  /// monomials; bounds every annihilation expansion.
  int max_channel_content(int channel) const;

  /// Graded degree of the vector's top monomial (sum of degree * index sums).
  int max_degree() const;

  /// Debug dump, one "p2 p1^3 (c0) ..." line per monomial.
  std::string debug_string() const;

 private:
  FockVector(Alphabet alphabet, std::vector<int> channel_degrees)
      : alphabet_(alphabet), channel_degrees_(std::move(channel_degrees)) {}

  Alphabet alphabet_ = Alphabet::f1;
  std::vector<int> channel_degrees_;
  std::map<Monomial, RatFun> terms_;
};

/// p_n on the given channel (multiplication).
FockVector multiply_power_sum(const FockVector& v, int channel, int n);
/// d/d p_n on the given channel.
FockVector differentiate_power_sum(const FockVector& v, int channel, int n);

/// The z^{z_power} coefficient of exp(sum_n weights(n) p_n z^n) (create) or
/// exp(sum_n weights(n) d/dp_n z^{-n}) (annihilate) applied to v. Requests
/// on the empty side of either exponential (negative create power, positive
/// annihilate power) throw std::invalid_argument.
FockVector apply_half_vertex(const FockVector& v, HalfVertex mode, int channel,
                             const std::function<RatFun(int)>& weights, int z_power);

/// Schur operator coefficient S_n on an orbit channel.
FockVector schur_op(const FockVector& v, int channel, int n);
/// Hall-Littlewood operator coefficient Q_n on the f1 channel.
FockVector hl_op(const FockVector& v, int n);
/// Adjoint Hall-Littlewood coefficient Q*_n on the f1 channel (z^{-n} term).
FockVector hl_dual_op(const FockVector& v, int n);

/// S_{lambda_1} ... S_{lambda_l}.1 per entry: the product of Schur
/// functions named by the pattern, one channel per entry.
FockVector schur_vector(const ColoredPattern& pattern);

/// Q_{mu_1} ... Q_{mu_l}.1 in the f1 alphabet (unnormalized
/// Hall-Littlewood vector attached to a unipotent class).
FockVector hl_vector(const Partition& mu);

/// Q*_{-n}.1 computed by direct expansion of the creation exponential.
FockVector qdual_vector(int n);

/// Closed form q^{-n} sum_{lambda |- n} p_lambda / z_lambda(q); equals
/// qdual_vector(n) (tested, not assumed).
FockVector qdual_power_sum_form(int n);

/// Basis change p_n(f1) -> sum over support entries of degree d | n of
/// (-1)^{n-1}/(q^n - 1) * d * p_{n/d}(entry), truncated to the support
/// (orbits outside it pair to zero against any Schur vector on the support).
FockVector convert_f1_to_orbits(const FockVector& v, const ColoredPattern& support);

/// Bilinear pairing. Orbit alphabet: <p_lambda, p_mu> = z_lambda per
/// channel, distinct monomials orthogonal. f1 alphabet:
/// <p_lambda, p_mu> = delta * z_lambda(q^{-1}) q^{-|lambda|}.
/// Throws std::invalid_argument on alphabet or channel mismatch.
RatFun fock_inner(const FockVector& u, const FockVector& v);

/// Character value at the unipotent class mu by direct matrix-element
/// expansion: q^{n(mu)} <schur_vector(label), hl_vector(mu) in orbit form>.
/// Entirely independent of the recursion engine; serves as its oracle.
RatFun character_matrix_element(const ColoredPattern& label, const Partition& mu);

/// Projection of the weight-n power-sum expansion of Q*_{-n}.1 to the given
/// support: (-1/q)^n sum over patterns on the support's channels of
/// p_pattern / Z_pattern.
FockVector qdual_projected_power_sums(int n, const ColoredPattern& support);

/// Same projection of the single-row Schur expansion: (-1/q)^n sum of
/// products of one-row Schur functions over the support's channels.
FockVector qdual_projected_schur_rows(int n, const ColoredPattern& support);

}  // namespace glnq
