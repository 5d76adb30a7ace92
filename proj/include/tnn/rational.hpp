#ifndef TNN_RATIONAL_HPP
#define TNN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace tnn {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "p/q" and decimal forms like "1.25" or "-0.5".
// Returns nullopt on malformed input or a zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

std::string to_string(const Rational& r);

} // namespace tnn

#endif
