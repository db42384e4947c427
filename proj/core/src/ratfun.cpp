#include "glnq/ratfun.hpp"

#include <stdexcept>

namespace glnq {

RatFun::RatFun(const Rat& constant) : num_(constant), den_(Rat(1)) {}

RatFun::RatFun(const PolyQ& polynomial) : num_(polynomial), den_(Rat(1)) {}

RatFun::RatFun(PolyQ numerator, PolyQ denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RatFun RatFun::q() { return RatFun(PolyQ::variable()); }

RatFun RatFun::q_power(int k) {
  if (k >= 0) return RatFun(PolyQ::monomial(k));
  return RatFun(PolyQ(Rat(1)), PolyQ::monomial(-k));
}

RatFun RatFun::operator-() const {
  RatFun r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& other) {
  num_ = num_ * other.den_ + other.num_ * den_;
  den_ *= other.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& other) {
  num_ = num_ * other.den_ - other.num_ * den_;
  den_ *= other.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator*=(const RatFun& other) {
  num_ *= other.num_;
  den_ *= other.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& other) {
  if (other.is_zero()) throw std::domain_error("division by the zero rational function");
  num_ *= other.den_;
  den_ *= other.num_;
  normalize();
  return *this;
}

RatFun RatFun::pow(int exponent) const {
  if (exponent == 0) return RatFun(Rat(1));
  if (is_zero() && exponent < 0) throw std::domain_error("0 raised to a negative power");
  unsigned k = exponent < 0 ? static_cast<unsigned>(-exponent) : static_cast<unsigned>(exponent);
  RatFun r;
  r.num_ = num_.pow(k);
  r.den_ = den_.pow(k);
  if (exponent < 0) std::swap(r.num_, r.den_);
  r.normalize();
  return r;
}

Rat RatFun::eval(const Rat& point) const {
  Rat d = den_.eval(point);
  if (d == 0) throw std::domain_error("pole of rational function at " + rat_to_string(point));
  return num_.eval(point) / d;
}

RatFun::PolynomialForm RatFun::to_polynomial() const {
  PolynomialForm form;
  if (den_.is_one()) {
    form.is_polynomial = true;
    form.polynomial = num_;
    form.integer_coefficients = num_.has_integer_coefficients();
  } else {
    form.residual_denominator = den_;
  }
  return form;
}

std::string RatFun::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = PolyQ(Rat(1));
    return;
  }
  PolyQ g = PolyQ::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = PolyQ::divmod(num_, g).first;
    den_ = PolyQ::divmod(den_, g).first;
  }
  if (!den_.is_monic()) {
    Rat inv = 1 / den_.leading_coefficient();
    num_ *= inv;
    den_ *= inv;
  }
}

}  // namespace glnq
