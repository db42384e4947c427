#include "glnq/polyq.hpp"

#include <sstream>
#include <stdexcept>

namespace glnq {

PolyQ::PolyQ(const Rat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

PolyQ::PolyQ(std::vector<Rat> ascending_coefficients) : coeffs_(std::move(ascending_coefficients)) {
  trim();
}

PolyQ PolyQ::variable() { return monomial(1); }

PolyQ PolyQ::monomial(int power, const Rat& coeff) {
  if (power < 0) throw std::invalid_argument("PolyQ::monomial: negative power");
  PolyQ p;
  if (coeff != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(power) + 1, Rat(0));
    p.coeffs_.back() = coeff;
  }
  return p;
}

bool PolyQ::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rat PolyQ::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

const Rat& PolyQ::leading_coefficient() const {
  if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool PolyQ::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

bool PolyQ::has_integer_coefficients() const {
  for (const Rat& c : coeffs_) {
    if (!rat_is_integer(c)) return false;
  }
  return true;
}

PolyQ PolyQ::operator-() const {
  PolyQ r(*this);
  for (Rat& c : r.coeffs_) c = -c;
  return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> product(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      product[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(product);
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rat& c : coeffs_) c *= scalar;
  return *this;
}

Rat PolyQ::eval(const Rat& point) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * point + *it;
  }
  return acc;
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {PolyQ(), a};
  std::vector<Rat> rem = a.coeffs_;
  std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
  const Rat& lead = b.coeffs_.back();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rat factor = rem[static_cast<std::size_t>(k + b.degree())] / lead;
    quot[static_cast<std::size_t>(k)] = factor;
    if (factor == 0) continue;
    for (int i = 0; i <= b.degree(); ++i) {
      rem[static_cast<std::size_t>(k + i)] -= factor * b.coeffs_[static_cast<std::size_t>(i)];
    }
  }
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ PolyQ::gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.made_monic();
}

PolyQ PolyQ::pow(unsigned exponent) const {
  PolyQ result{Rat(1)};
  PolyQ base(*this);
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent != 0) base *= base;
  }
  return result;
}

PolyQ PolyQ::made_monic() const {
  if (is_zero() || is_monic()) return *this;
  PolyQ r(*this);
  Rat inv = 1 / coeffs_.back();
  for (Rat& c : r.coeffs_) c *= inv;
  return r;
}

std::string PolyQ::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    const Rat& c = coeffs_[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    Rat abs_c = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = abs_c == 1;
    if (p == 0 || !unit) out << abs_c.get_str();
    if (p > 0) {
      if (!unit) out << "*";
      out << "q";
      if (p > 1) out << "^" << p;
    }
  }
  return out.str();
}

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace glnq
