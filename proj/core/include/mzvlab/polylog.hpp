#pragma once

#include <map>
#include <vector>

#include "mzvlab/bigfixed.hpp"
#include "mzvlab/index.hpp"
#include "mzvlab/word.hpp"

namespace mzvlab {

// Smallest M with 2 * M^depth * 2^-M < 10^-prec (checked in exact integer
// arithmetic). Majorant for the tail of the polylog series at 1/2.
int series_truncation(int depth, int prec);

// Decimal fixed-point engine for truncated multiple polylogarithm series at
// the point 1/2. A "table" holds, per last summation variable m <= M, the
// inner sum over the earlier variables; words are processed one letter at a
// time, so all prefixes of a word share work.
class SeriesEngine {
public:
    using Table = std::vector<BigInt>;  // 1-based: entry m in 1..trunc

    SeriesEngine(int scale, int trunc);

    int scale() const { return scale_; }
    int trunc() const { return trunc_; }

    // Table after the leading 'y': T[m] = 1/m.
    void initial(Table& t) const;
    // Raise the exponent of the last variable: T[m] /= m.
    void step_x(Table& t) const;
    // Open a new summation variable: T'[m] = (sum_{m'<m} T[m']) / m.
    void step_y(const Table& in, Table& out) const;
    // Value mantissa: sum of T[m] * 2^-m.
    BigInt value_of(const Table& t) const;

    const BigInt& unit() const { return ten_scale_; }

private:
    int scale_;
    int trunc_;
    BigInt ten_scale_;
    std::vector<BigInt> half_pow_;
};

// Multiple polylogarithm at 1/2 for a nonempty index (admissibility not
// required; the series converges geometrically). Result accurate to
// 10^-digits; guard < 0 selects 10 + weight.
BigFixed polylog_half(const Index& c, int digits, int guard = -1);

struct BulkOptions {
    int digits = 50;
    int guard = -1;  // -1: auto, 10 + heaviest weight in the batch
    int threads = 1;
};

// Evaluates zeta for every (admissible) target via the Hölder convolution at
// 1/2: zeta(k) = sum over factorizations w = u v of I(k) of P(u) P(rho(v)),
// with rho(v) read off as a prefix of tau(I(k)). All polylog factors of the
// whole batch are computed once over a shared prefix trie. Values are
// returned rounded to `digits` fractional digits.
std::map<Index, BigFixed> holder_evaluate(const std::vector<Index>& targets, const BulkOptions& opt);

}  // namespace mzvlab
