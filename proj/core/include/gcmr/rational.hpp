#ifndef GCMR_RATIONAL_HPP
#define GCMR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>

namespace gcmr {

// All delay accounting runs on exact rationals over arbitrary-precision
// integers: binomials at K=64 scale (e.g. 32*C(64,32) ~ 5.9e19) overflow
// 64-bit products.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;

inline Rat rat(long num, long den = 1) { return Rat(BigInt(num), BigInt(den)); }

inline double to_double(const Rat& r) {
  return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

// Canonical text form: "p" when the reduced denominator is 1, else "p/q".
std::string to_string(const Rat& r);
std::string to_string(const BigInt& n);

// Parses "p", "p/q", with optional sign. Throws Error(BadInput) otherwise.
Rat parse_rational(const std::string& text);

}  // namespace gcmr

#endif
