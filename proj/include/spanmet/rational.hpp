#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace spanmet {

using Rational = mpq_class;
using BigInt = mpz_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact parse of "3", "-2", "1.25", "1.5e2" or "7/3". Throws ParseError.
Rational parse_rational(const std::string& token);

// Canonical "p/q" form with q >= 1, e.g. "0/1", "1/6".
std::string rational_string(const Rational& q);

// "p" for integers, otherwise "p/q".
std::string compact_rational_string(const Rational& q);

// Decimal rendering with at most `significant` digits, round half up,
// trailing zeros trimmed. Falls back to scientific form for extreme
// magnitudes.
std::string decimal_string(const Rational& q, int significant = 12);

// Exact textual form that parse_rational inverts: a finite decimal when the
// denominator is 2^a 5^b, otherwise "p/q".
std::string exact_token(const Rational& q);

BigInt pow10(unsigned long e);

}  // namespace spanmet
