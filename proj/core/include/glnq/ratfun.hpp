#pragma once

#include <string>

#include "glnq/polyq.hpp"

namespace glnq {

/// Exact rational function in q, kept in canonical reduced form:
/// gcd(numerator, denominator) = 1 and the denominator is monic.
/// Negative powers of q are represented as ordinary fractions, e.g.
/// q^{-k} is 1/q^k; equality is plain member comparison.
class RatFun {
 public:
  RatFun() : den_(Rat(1)) {}  // zero
  RatFun(int constant) : RatFun(Rat(constant)) {}
  RatFun(const Rat& constant);
  RatFun(const PolyQ& polynomial);
  RatFun(PolyQ numerator, PolyQ denominator);  // throws std::domain_error if denominator is zero

  static RatFun q();               // the indeterminate
  static RatFun q_power(int k);    // q^k, any sign of k

  const PolyQ& numerator() const { return num_; }
  const PolyQ& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& other);
  RatFun& operator-=(const RatFun& other);
  RatFun& operator*=(const RatFun& other);
  RatFun& operator/=(const RatFun& other);  // throws std::domain_error on division by zero

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  RatFun pow(int exponent) const;  // any sign; throws std::domain_error on 0^negative

  /// Evaluation at a rational point; throws std::domain_error at a pole.
  Rat eval(const Rat& point) const;

  /// Result of asking a rational function for its polynomial form.
  struct PolynomialForm {
    bool is_polynomial = false;
    PolyQ polynomial;              // meaningful when is_polynomial
    bool integer_coefficients = false;
    PolyQ residual_denominator;    // the offending denominator otherwise
  };
  PolynomialForm to_polynomial() const;

  std::string to_string() const;

 private:
  void normalize();
  PolyQ num_;
  PolyQ den_;
};

}  // namespace glnq
