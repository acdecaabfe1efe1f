#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bott {

// Exact arbitrary-precision integer. All cohomology coefficients, symmetric
// functions, determinants and primitive-relation data are computed in Int;
// matrix entries themselves are plain int64_t.
using Int = boost::multiprecision::cpp_int;

}  // namespace bott
