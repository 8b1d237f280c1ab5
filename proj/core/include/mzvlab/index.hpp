#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "mzvlab/lincomb.hpp"
#include "mzvlab/rational.hpp"

namespace mzvlab {

// Argument tuple of a multiple zeta value: a finite sequence of positive
// integers. The empty index is a legal value (it is the shuffle identity)
// but is rejected by the duality operators.
class Index {
public:
    Index() = default;
    explicit Index(std::vector<int> parts);
    Index(std::initializer_list<int> parts);

    // Parses the comma-separated text form, e.g. "1,3,2". "" is the empty index.
    static Index parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int depth() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int last() const { return parts_.back(); }

    // Nonempty with last part >= 2 (the convergence condition).
    bool admissible() const { return !parts_.empty() && parts_.back() >= 2; }

    std::string str() const;

    friend bool operator==(const Index& a, const Index& b) {
        return a.parts_ == b.parts_;
    }
    // Canonical basis order: weight, then depth, then lexicographic on parts.
    // RelationVector coordinates depend on this order; do not change it.
    friend std::strong_ordering operator<=>(const Index& a, const Index& b);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

using IndexSum = LinComb<Index>;

// Dual index via the (a_p, b_q) block decomposition; an involution on
// admissible indices with weight(k) = depth(k) + depth(dual(k)).
Index dual(const Index& k);

// Hoffman's dual: exchange the roles of "comma" and "+1" in the unit
// decomposition of the weight. Involution on nonempty indices with
// depth(k) + depth(hoffman_dual(k)) = weight(k) + 1.
Index hoffman_dual(const Index& k);

// (k_1,...,k_r) -> (k_1,...,k_{r-1},k_r - 1); requires k admissible.
Index minus_last(const Index& k);

// Componentwise sum; e may contain zeros and must have length depth(k).
Index oplus(const Index& k, const std::vector<int>& e);

// All admissible indices of weight n in the canonical basis order; the
// count is 2^(n-2). Requires n >= 2.
std::vector<Index> enumerate_admissible(int n);

// All nonempty indices (compositions) of weight n; count 2^(n-1).
std::vector<Index> enumerate_compositions(int n);

// Formal sum of all interleavings of k and l that preserve the internal
// order of each; equal interleavings merge with multiplicity.
IndexSum index_shuffle(const Index& k, const Index& l);

// Single-entry harmonic product (k) * l: the shuffle part plus the r
// "absorption" terms where k is added onto one slot of l. Requires l nonempty.
IndexSum harmonic_single(int k, const Index& l);

// All e in Z_{>=0}^len with sum m, in lexicographic order.
std::vector<std::vector<int>> weak_compositions(int m, int len);

// All (a_1,...,a_count) with a_i >= mins[i] and sum = total.
std::vector<std::vector<int>> bounded_compositions(int total, const std::vector<int>& mins);

}  // namespace mzvlab
