#pragma once

#include "mzvlab/bigfixed.hpp"

namespace mzvlab {

// Arbitrary-precision classical constants, used as independent oracles for
// the series evaluator. Each is computed by integer-only series summation
// at the requested scale plus internal guard digits.

// Machin: pi = 16 atan(1/5) - 4 atan(1/239).
BigFixed pi_fixed(int scale);

// Alternative route for cross-checks: pi = 4 atan(1/2) + 4 atan(1/3).
BigFixed pi_fixed_alt(int scale);

// ln 2 = 2 atanh(1/3).
BigFixed ln2_fixed(int scale);

// atan(1/k) for integer k >= 2.
BigFixed atan_inv(unsigned long k, int scale);

// n! as an exact integer.
BigInt factorial(unsigned long n);

// Integer power of a fixed-point value (exponent >= 0), 1 ulp per multiply.
BigFixed pow_fixed(const BigFixed& base, unsigned exponent);

}  // namespace mzvlab
