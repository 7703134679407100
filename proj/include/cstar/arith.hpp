#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cstar {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

// "p/q", or "p" when q == 1.
inline std::string to_string(const Rat& v) {
  const Int num = boost::multiprecision::numerator(v);
  const Int den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rat make_rat(const Int& num, const Int& den) { return Rat(num, den); }

}  // namespace cstar
