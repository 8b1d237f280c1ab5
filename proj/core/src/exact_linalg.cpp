#include "mzvlab/exact_linalg.hpp"

#include <stdexcept>

namespace mzvlab {

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Clears denominators row by row (scaling an equation row preserves both the
// row span and the solution set of a linear system).
IntMatrix integerize(const std::vector<RatVec>& rows) {
    IntMatrix out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        BigInt lcm(1);
        for (const auto& q : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<BigInt> r;
        r.reserve(row.size());
        for (const auto& q : row) {
            BigInt scaled = q.get_num() * (lcm / q.get_den());
            r.push_back(std::move(scaled));
        }
        out.push_back(std::move(r));
    }
    return out;
}

struct Echelon {
    IntMatrix m;
    std::vector<std::size_t> pivot_cols;  // per pivot row
};

// Fraction-free forward elimination with row swaps; columns < limit_cols are
// eligible as pivots (the rest are carried along, e.g. an augmented column).
Echelon bareiss(IntMatrix m, std::size_t limit_cols) {
    Echelon e;
    std::size_t nrows = m.size();
    std::size_t ncols = nrows ? m[0].size() : 0;
    BigInt prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < limit_cols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && sgn(m[piv][c]) == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j) {
                BigInt t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.m = std::move(m);
    return e;
}

}  // namespace

int rank_exact(const std::vector<RatVec>& rows) {
    if (rows.empty()) return 0;
    std::size_t ncols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != ncols) throw std::invalid_argument("rank_exact: ragged rows");
    Echelon e = bareiss(integerize(rows), ncols);
    return static_cast<int>(e.pivot_cols.size());
}

std::optional<RatVec> solve_in_span(const std::vector<RatVec>& gens, const RatVec& target) {
    std::size_t g = gens.size();
    std::size_t n = target.size();
    for (const auto& r : gens)
        if (r.size() != n) throw std::invalid_argument("solve_in_span: dimension mismatch");
    if (g == 0) {
        for (const auto& q : target)
            if (!is_zero(q)) return std::nullopt;
        return RatVec{};
    }
    // Equations indexed by coordinate: sum_i c_i gens[i][j] = target[j].
    std::vector<RatVec> system(n, RatVec(g + 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < g; ++i) system[j][i] = gens[i][j];
        system[j][g] = target[j];
    }
    Echelon e = bareiss(integerize(system), g);
    // Inconsistent iff a zero row in the generator columns has nonzero tail.
    std::size_t r = e.pivot_cols.size();
    for (std::size_t i = r; i < n; ++i)
        if (sgn(e.m[i][g]) != 0) return std::nullopt;

    RatVec coeff(g, Rational(0));
    for (std::size_t i = r; i-- > 0;) {
        std::size_t pc = e.pivot_cols[i];
        Rational acc(e.m[i][g]);
        for (std::size_t j = pc + 1; j < g; ++j) {
            if (sgn(e.m[i][j]) != 0) acc -= Rational(e.m[i][j]) * coeff[j];
        }
        acc /= Rational(e.m[i][pc]);
        acc.canonicalize();
        coeff[pc] = acc;
    }
    return coeff;
}

}  // namespace mzvlab
