#pragma once

#include <optional>
#include <vector>

#include "mzvlab/rational.hpp"

namespace mzvlab {

using RatVec = std::vector<Rational>;

// Rank of the span of the given row vectors, computed by fraction-free
// (Bareiss) elimination over the integers after clearing denominators.
int rank_exact(const std::vector<RatVec>& rows);

// Decides target in span(gens); on success returns coefficients c with
// sum_i c[i] * gens[i] = target. Forward elimination is fraction-free;
// back-substitution is rational.
std::optional<RatVec> solve_in_span(const std::vector<RatVec>& gens, const RatVec& target);

}  // namespace mzvlab
