#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace latpath {

// Multiplicities grow multiplicatively with doubled triangle areas, so the
// whole engine computes in unbounded integers. No overflow policy to tune.
using Integer = boost::multiprecision::cpp_int;

} // namespace latpath
