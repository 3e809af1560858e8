#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "fairdiv/errors.hpp"

namespace fairdiv {

// Exact numbers. mpq_class keeps results of arithmetic in lowest terms; values
// built by hand must go through canonical() before being compared or printed.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "p/q" or a finite decimal such as "12.375" exactly. A leading '-'
// is accepted so callers can report a sign error in their own terms.
// Throws InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, otherwise "p/q" in lowest terms with q > 0.
std::string format_rational(const Rational& value);

Rational canonical(Rational value);

}  // namespace fairdiv
