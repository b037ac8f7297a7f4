#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ellb {

// Arbitrary-precision signed integer used by every exact computation in the
// library.  Smith reduction on modest matrices routinely produces entries far
// outside 64 bits, so exactness is not negotiable here.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

} // namespace ellb
