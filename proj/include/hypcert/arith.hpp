#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hypcert {

// All certificate arithmetic is exact; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace hypcert
