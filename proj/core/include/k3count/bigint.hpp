#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace k3count {

using BigInt = boost::multiprecision::cpp_int;

// Exact binomial coefficient C(n, k); zero when k is outside [0, n].
BigInt binomial(int n, int k);

}  // namespace k3count
