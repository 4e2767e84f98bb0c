#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cluskit {

// All counting and series arithmetic is exact: arbitrary-precision integers
// and rationals, no floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(int n);
Int binomial(long long n, long long k);

}  // namespace cluskit
