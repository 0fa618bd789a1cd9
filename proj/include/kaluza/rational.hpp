#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kaluza {

// Arbitrary-precision fraction, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q", "p", "-p/q". A leading U+2212 minus sign is accepted as well.
// Throws InputError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

// Always "p/q", integers included ("3/1", "0/1", "-1/64").
std::string to_string(const Rational& value);

Integer factorial(unsigned long n);

} // namespace kaluza
