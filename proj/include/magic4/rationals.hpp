#pragma once

// Exact integer and rational scalars used throughout the library.
// boost::rational keeps values in lowest terms with a positive denominator,
// which is exactly the normalization the equality tests rely on.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace magic4 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Rat rat(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }

inline double to_double(const Rat& r) {
  return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

inline std::string to_string(const Rat& r) {
  std::string s = r.numerator().str();
  if (r.denominator() != 1) s += "/" + r.denominator().str();
  return s;
}

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace magic4
