#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace schub {

// Exact integer coefficients everywhere; expansion coefficients grow fast
// enough that fixed-width integers are not an option.
using Int = boost::multiprecision::cpp_int;

inline std::string int_str(const Int& v) { return v.str(); }

inline Int int_pow(Int base, unsigned e) {
  Int r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace schub
