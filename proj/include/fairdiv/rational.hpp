#ifndef FAIRDIV_RATIONAL_HPP_
#define FAIRDIV_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fairdiv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "3", "-2", or "p/q" with integer p and positive q.
Rational parse_rational(const std::string& text);

// Emits "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

}  // namespace fairdiv

#endif  // FAIRDIV_RATIONAL_HPP_
