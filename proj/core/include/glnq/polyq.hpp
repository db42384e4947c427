#pragma once

#include <utility>
#include <vector>

#include "glnq/rational.hpp"

namespace glnq {

/// Univariate polynomial in the indeterminate q over exact rationals.
/// Coefficients are stored by ascending power with no trailing zero, so the
/// zero polynomial has an empty coefficient vector and representation is
/// canonical: two polynomials are equal iff their vectors are.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(const Rat& constant);
  explicit PolyQ(std::vector<Rat> ascending_coefficients);

  static PolyQ variable();                                // q
  static PolyQ monomial(int power, const Rat& coeff = 1); // coeff * q^power, power >= 0

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  Rat coefficient(int power) const;
  const Rat& leading_coefficient() const;  // throws std::domain_error on zero
  bool is_monic() const;
  bool has_integer_coefficients() const;

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& other);
  PolyQ& operator-=(const PolyQ& other);
  PolyQ& operator*=(const PolyQ& other);
  PolyQ& operator*=(const Rat& scalar);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
  friend PolyQ operator*(PolyQ a, const Rat& s) { return a *= s; }
  friend PolyQ operator*(const Rat& s, PolyQ a) { return a *= s; }

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

  Rat eval(const Rat& point) const;

  /// Exact Euclidean division: a = quot * b + rem with deg rem < deg b.
  /// Throws std::domain_error when b is zero.
  static std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

  /// Monic greatest common divisor; gcd(0, 0) = 0.
  static PolyQ gcd(PolyQ a, PolyQ b);

  PolyQ pow(unsigned exponent) const;

  /// Scales so the leading coefficient is 1 (the zero polynomial is left alone).
  PolyQ made_monic() const;

  std::string to_string() const;  // human-readable, e.g. "q^2 - 1"

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

}  // namespace glnq
