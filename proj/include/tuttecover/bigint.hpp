#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tuttecover {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

}  // namespace tuttecover
