#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace treelie {

/// Exact rational number, always in lowest terms with positive denominator.
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
	Rational r(static_cast<long>(num), static_cast<long>(den));
	r.canonicalize();
	return r;
}

} // namespace treelie
