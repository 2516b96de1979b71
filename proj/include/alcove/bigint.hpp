#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace alcove {

// Arbitrary-precision integer used for all counts and series coefficients.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace alcove
