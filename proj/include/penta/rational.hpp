#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace penta {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using BigRational = mpq_class;

[[nodiscard]] inline bool is_zero(const BigRational& v) { return sgn(v) == 0; }

/// Exact value of a finite double (its full binary expansion).
[[nodiscard]] BigRational rational_from_double(double v);

/// Parses a decimal literal ("-12", "0.125", "3.5e-2") or a fraction
/// ("21/4") exactly. Throws Error(parse_error) on anything else.
[[nodiscard]] BigRational parse_rational(std::string_view text);

/// "126", "-3/8".
[[nodiscard]] std::string to_string(const BigRational& v);

/// Nearest double, correctly rounded.
[[nodiscard]] double to_double(const BigRational& v);

}  // namespace penta
