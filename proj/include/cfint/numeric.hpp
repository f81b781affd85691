#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cfint/rational.hpp"

namespace cfint {

// About 100 significant decimal digits.
using BigFloat = boost::multiprecision::cpp_bin_float_100;

inline BigFloat to_big(const Rational& r) {
  return BigFloat(r.numerator().get_str()) / BigFloat(r.denominator().get_str());
}

}  // namespace cfint
