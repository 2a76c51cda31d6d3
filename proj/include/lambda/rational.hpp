#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lb {

/// Arbitrary-precision exact rational. All arithmetic in the library is done
/// over this type; there is no floating point anywhere in the core.
using Rational = mpq_class;

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or a
/// zero denominator. Decimal notation is rejected.
Rational parse_rational(std::string_view text);

/// Formats as "p/q" with q > 0 always written, e.g. "6/1", "0/1", "-3/2".
std::string format_rational(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace lb
