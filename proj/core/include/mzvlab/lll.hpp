#pragma once

#include <vector>

#include "mzvlab/rational.hpp"

namespace mzvlab {

// Exact-arithmetic lattice reduction (Lovász parameter delta, default 99/100)
// on the rows of `basis`: integer vectors spanning a lattice of full row
// rank. Reduces in place; rationals are used for the Gram-Schmidt data, so
// no precision management is needed. Throws if the rows are dependent.
void lll_reduce(std::vector<std::vector<BigInt>>& basis, const Rational& delta = Rational(99, 100));

}  // namespace mzvlab
