#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kgraph {

// Exact arithmetic everywhere; all identities we check have integer
// coefficients, so any mismatch must be a real bug, never roundoff.
using Rational = boost::multiprecision::cpp_rational;

}  // namespace kgraph
