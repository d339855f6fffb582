#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace eqcount {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace eqcount
