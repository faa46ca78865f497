#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace trigonal
{

// Exact rational. gmpxx keeps results of arithmetic canonical (reduced, positive denominator).
using rational = mpq_class;
using integer = mpz_class;

// Builds num/den in canonical form. Throws usage_error on a zero denominator.
rational make_rational(const integer &num, const integer &den);

// Parses "a", "-a" or "a/b". Throws usage_error on malformed input or zero denominator.
rational parse_rational(std::string_view text);

std::string to_string(const rational &q);

// Magnitude as a double, for reporting only.
double to_double_approx(const rational &q);

} // namespace trigonal
