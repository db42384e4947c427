#include "glnq/rational.hpp"

#include <stdexcept>

namespace glnq {

Rat rat_from_string(const std::string& text) {
  Rat value;
  if (value.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  value.canonicalize();
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + text + "'");
  }
  return value;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

Rat rat_pow(const Rat& value, long exponent) {
  if (exponent == 0) return Rat(1);
  bool invert = exponent < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Rat power;
  mpz_pow_ui(power.get_num_mpz_t(), value.get_num_mpz_t(), k);
  mpz_pow_ui(power.get_den_mpz_t(), value.get_den_mpz_t(), k);
  power.canonicalize();
  if (invert) {
    if (power == 0) throw std::domain_error("0 raised to a negative power");
    power = 1 / power;
  }
  return power;
}

bool rat_is_integer(const Rat& value) { return value.get_den() == 1; }

}  // namespace glnq
