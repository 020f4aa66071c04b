#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace regind {

/// Exact rational used for every bound value and comparison.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational &r) {
  if (r.denominator() == 1)
    return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational &r) {
  return boost::rational_cast<double>(r);
}

} // namespace regind
