#ifndef COVER_RAMSEY_EXACT_HPP
#define COVER_RAMSEY_EXACT_HPP

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cover_ramsey {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, r); zero when r > n.
BigInt binomial(std::size_t n, std::size_t r);

/// 27182818284590453 / 10^16, a rational upper bound on e.
Rational e_upper_bound();

/// "p/q", or "p" when the denominator is one.
std::string to_fraction_string(const Rational& value);

/// Rendering with `digits` significant digits in scientific-or-fixed form.
std::string to_decimal_string(const Rational& value, int digits = 12);

}  // namespace cover_ramsey

#endif  // COVER_RAMSEY_EXACT_HPP
