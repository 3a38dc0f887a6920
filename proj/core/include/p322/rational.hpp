#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace p322 {

// All arithmetic in this library is exact. Integers are arbitrary precision
// (Column I of the 3125/1296 row needs ten sexagesimal places, and gap
// analysis cross-multiplies squared long sides), rationals are kept in
// lowest terms with a positive denominator by the backend.
using Int = boost::multiprecision::cpp_int;
using ExactRatio = boost::multiprecision::cpp_rational;

inline Int numerator(const ExactRatio& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const ExactRatio& r) { return boost::multiprecision::denominator(r); }

inline ExactRatio ratio(Int n, Int d) { return ExactRatio(std::move(n), std::move(d)); }

}  // namespace p322
