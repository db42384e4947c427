#pragma once

#include <gmpxx.h>

#include <string>

namespace glnq {

/// Arbitrary-precision rational scalar. GMP keeps arithmetic results in
/// lowest terms with positive denominator; values built from strings or
/// raw integer pairs go through canonicalize() here.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p", "-p" or "p/q" in base 10 and reduces to lowest terms.
Rat rat_from_string(const std::string& text);

/// Canonical decimal form, "p" or "p/q" in lowest terms.
std::string rat_to_string(const Rat& value);

/// value^exponent for any integer exponent; throws std::domain_error on 0^negative.
Rat rat_pow(const Rat& value, long exponent);

bool rat_is_integer(const Rat& value);

}  // namespace glnq
