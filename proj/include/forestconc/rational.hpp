#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace forestconc {

/// Arbitrary-precision rational, used wherever exactness is asserted
/// (fractional chromatic optimum, ratio checks).
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

}  // namespace forestconc
