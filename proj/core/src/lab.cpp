#include "mzvlab/lab.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mzvlab/lll.hpp"

namespace mzvlab {

namespace {

std::map<Index, std::size_t> basis_positions(int weight) {
    std::map<Index, std::size_t> pos;
    auto basis = enumerate_admissible(weight);
    for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(std::move(basis[i]), i);
    return pos;
}

RatVec combo_coords(const LinComb<Index>& terms, int weight) {
    auto pos = basis_positions(weight);
    RatVec coords(pos.size(), Rational(0));
    for (const auto& [k, c] : terms) {
        auto it = pos.find(k);
        if (it == pos.end())
            throw std::invalid_argument("to_vector: term (" + k.str() + ") has weight != " +
                                        std::to_string(weight));
        coords[it->second] = c;
    }
    return coords;
}

// Short scientific form of a fixed-point value, exact up to the displayed
// digits (e.g. "3.1e-47"; "0" for an exact zero).
std::string short_residual(const BigFixed& v) {
    BigInt a = abs(v.mantissa());
    if (sgn(a) == 0) return "0";
    std::string digits = a.get_str();
    int exp10 = static_cast<int>(digits.size()) - 1 - v.scale();
    std::string out;
    out += digits[0];
    if (digits.size() > 1) {
        out += '.';
        out += digits[1];
    }
    out += 'e';
    out += (exp10 < 0 ? "-" : "+");
    out += std::to_string(exp10 < 0 ? -exp10 : exp10);
    return out;
}

}  // namespace

RelationVector to_vector(const ZetaCombo& combo, int weight) {
    if (!combo.is_zero() && combo.weight() != weight)
        throw std::invalid_argument("to_vector: combo weight mismatch");
    return RelationVector{weight, SymbolLevel::zeta, combo_coords(combo.terms(), weight)};
}

RelationVector to_vector(const OhnoCombo& combo, int weight) {
    if (!combo.is_zero() && combo.weight() != weight)
        throw std::invalid_argument("to_vector: combo weight mismatch");
    return RelationVector{weight, SymbolLevel::ohno, combo_coords(combo.terms(), weight)};
}

long ohno_span_dim(int n) {
    if (n < 2) throw std::invalid_argument("ohno_span_dim: weight must be >= 2");
    long self_dual = 0;
    long total = 0;
    for (const auto& k : enumerate_admissible(n)) {
        ++total;
        if (dual(k) == k) ++self_dual;
    }
    return (total - self_dual) / 2;
}

bool span_membership(const RelationVector& v, const std::vector<RelationVector>& generators,
                     RatVec* certificate) {
    std::vector<RatVec> rows;
    rows.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.weight != v.weight || g.level != v.level)
            throw std::invalid_argument("span_membership: mixed weight or symbol level");
        rows.push_back(g.coords);
    }
    auto cert = solve_in_span(rows, v.coords);
    if (!cert) return false;
    if (certificate) *certificate = std::move(*cert);
    return true;
}

int rank(const std::vector<RelationVector>& vectors) {
    if (vectors.empty()) return 0;
    std::vector<RatVec> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.weight != vectors[0].weight || v.level != vectors[0].level)
            throw std::invalid_argument("rank: mixed weight or symbol level");
        rows.push_back(v.coords);
    }
    return rank_exact(rows);
}

std::vector<RelationVector> ohno_generator_vectors(int weight) {
    std::vector<RelationVector> out;
    for (const auto& k : enumerate_admissible(weight)) {
        OhnoCombo g = gen_ohno_symbols(k);
        if (g.is_zero()) continue;
        out.push_back(to_vector(g, weight));
    }
    return out;
}

std::vector<RelationVector> proved_family_vectors(int weight) {
    std::vector<RelationVector> out = ohno_generator_vectors(weight);
    for (int kw = 2; kw <= weight; kw += 2) {
        int m = weight - kw;
        for (const auto& k : enumerate_duplex_indices(kw)) {
            OhnoCombo g = gen_double_ohno_symbols(k, m);
            if (!g.is_zero()) out.push_back(to_vector(g, weight));
        }
    }
    for (int s = 2; s + 3 <= weight; ++s) {
        int t = weight - 1 - s;
        if (t < 2) continue;
        OhnoCombo g = gen_D_symbols(s, t);
        if (!g.is_zero()) out.push_back(to_vector(g, weight));
    }
    return out;
}

namespace {

struct Matrix {
    // V[m][k]: coefficient m of the Ohno series of basis index k.
    std::vector<std::vector<BigFixed>> v;
};

Matrix fill_matrix(const std::vector<Index>& basis, int rows_total, int digits, int threads) {
    std::set<Index> targets;
    for (const auto& k : basis)
        for (int m = 0; m < rows_total; ++m)
            for (const auto& e : weak_compositions(m, k.depth())) targets.insert(oplus(k, e));
    Evaluator ev(digits, threads);
    ev.warm(std::vector<Index>(targets.begin(), targets.end()));
    Matrix mat;
    mat.v.assign(static_cast<std::size_t>(rows_total), {});
    for (int m = 0; m < rows_total; ++m) {
        auto& row = mat.v[static_cast<std::size_t>(m)];
        row.reserve(basis.size());
        for (const auto& k : basis) {
            BigFixed sum = BigFixed::zero(digits);
            for (const auto& e : weak_compositions(m, k.depth())) sum += ev.zeta(oplus(k, e));
            row.push_back(std::move(sum));
        }
    }
    return mat;
}

BigFixed residual_max(const Matrix& mat, const std::vector<long>& c, int from_row, int to_row,
                      int digits) {
    BigFixed best = BigFixed::zero(digits);
    for (int m = from_row; m < to_row; ++m) {
        BigFixed acc = BigFixed::zero(digits);
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            acc += mat.v[static_cast<std::size_t>(m)][k].mul_int(c[k]);
        }
        acc = acc.abs();
        if (acc.compare(best) > 0) best = acc;
    }
    return best;
}

}  // namespace

DiscoveryResult discover_relations(int n, int rows, int digits, int threads) {
    if (n < 2) throw std::invalid_argument("discover_relations: weight must be >= 2");
    auto basis = enumerate_admissible(n);
    const int bsize = static_cast<int>(basis.size());
    if (rows < 0) rows = bsize + 8;
    if (rows < bsize + 8)
        throw std::invalid_argument("discover_relations: need at least basis+8 coefficient rows");

    DiscoveryResult res;
    res.weight = n;
    res.rows = rows;
    res.digits = digits;

    const int oos = 5;  // held-out rows m = rows .. rows+4
    Matrix mat = fill_matrix(basis, rows + oos, digits, threads);

    // Lattice rows [I | C * V^T] with C = 10^(digits-5).
    const int cscale = digits - 5;
    std::vector<std::vector<BigInt>> lattice(static_cast<std::size_t>(bsize));
    for (int k = 0; k < bsize; ++k) {
        auto& row = lattice[static_cast<std::size_t>(k)];
        row.assign(static_cast<std::size_t>(bsize + rows), BigInt(0));
        row[static_cast<std::size_t>(k)] = 1;
        for (int m = 0; m < rows; ++m)
            row[static_cast<std::size_t>(bsize + m)] =
                mat.v[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)].rescaled(cscale).mantissa();
    }
    lll_reduce(lattice);

    // Candidate extraction with the accept / ambiguous / reject bands.
    const long height_cap = 1000000;
    std::vector<std::vector<long>> accepted;
    for (const auto& row : lattice) {
        std::vector<long> c(static_cast<std::size_t>(bsize));
        long height = 0;
        bool in_cap = true;
        bool zero = true;
        for (int k = 0; k < bsize; ++k) {
            const BigInt& x = row[static_cast<std::size_t>(k)];
            if (!x.fits_slong_p()) {
                in_cap = false;
                break;
            }
            long v = x.get_si();
            c[static_cast<std::size_t>(k)] = v;
            height = std::max(height, std::labs(v));
            if (v != 0) zero = false;
        }
        if (!in_cap || zero || height >= height_cap) continue;
        BigFixed r = residual_max(mat, c, 0, rows, digits);
        if (r.abs_less_pow10(-(digits / 2))) {
            accepted.push_back(std::move(c));
        } else if (r.abs_less_pow10(-(digits / 4))) {
            throw PrecisionError("discover_relations: residual " + short_residual(r) +
                                 " between 10^-" + std::to_string(digits / 2) + " and 10^-" +
                                 std::to_string(digits / 4) + "; raise digits");
        }
    }

    // Keep an independent subset (exact rank filter).
    std::vector<RatVec> kept;
    std::vector<std::vector<long>> independent;
    for (auto& c : accepted) {
        RatVec q(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) q[i] = c[i];
        kept.push_back(q);
        if (rank_exact(kept) == static_cast<int>(kept.size()))
            independent.push_back(std::move(c));
        else
            kept.pop_back();
    }

    // Soundness: stability of each relation when digits increase by 10.
    Matrix mat_hi = fill_matrix(basis, rows + oos, digits + 10, threads);
    res.stable_at_higher_digits = true;
    res.out_of_sample_ok = true;
    BigFixed worst = BigFixed::zero(digits), worst_oos = BigFixed::zero(digits);
    for (const auto& c : independent) {
        BigFixed r_hi = residual_max(mat_hi, c, 0, rows, digits + 10);
        if (!r_hi.abs_less_pow10(-((digits + 10) / 2))) res.stable_at_higher_digits = false;
        BigFixed r_sample = residual_max(mat, c, 0, rows, digits);
        BigFixed r_oos = residual_max(mat, c, rows, rows + oos, digits);
        if (!r_oos.abs_less_pow10(-digits + 8)) res.out_of_sample_ok = false;
        if (r_sample.compare(worst) > 0) worst = r_sample;
        if (r_oos.compare(worst_oos) > 0) worst_oos = r_oos;
        DiscoveredRelation rel;
        rel.coeffs = c;
        for (long v : c) rel.height = std::max(rel.height, std::labs(v));
        rel.residual = short_residual(r_sample);
        rel.oos_residual = short_residual(r_oos);
        res.relations.push_back(std::move(rel));
    }
    res.max_residual = short_residual(worst);
    res.max_oos_residual = short_residual(worst_oos);

    // Soundness: the discovered span must contain the duality span and every
    // proved-family vector of this weight.
    std::vector<RelationVector> found;
    for (const auto& rel : res.relations) {
        RelationVector v;
        v.weight = n;
        v.level = SymbolLevel::ohno;
        v.coords.assign(rel.coeffs.begin(), rel.coeffs.end());
        found.push_back(std::move(v));
    }
    res.contains_ohno_span = true;
    for (const auto& g : ohno_generator_vectors(n))
        if (!span_membership(g, found)) res.contains_ohno_span = false;
    res.contains_proved_families = true;
    for (const auto& g : proved_family_vectors(n))
        if (!span_membership(g, found)) res.contains_proved_families = false;

    return res;
}

Table1 table1(int weight_max, int digits, int rows, int threads) {
    Table1 t;
    for (int n = 2; n <= 13; ++n) {
        t.weights.push_back(n);
        t.ohno_dims.push_back(ohno_span_dim(n));
        if (n <= weight_max) {
            auto d = discover_relations(n, rows, digits, threads);
            t.all_dims.push_back(static_cast<long>(d.relations.size()));
            t.diagnostics.push_back("weight " + std::to_string(n) + ": " +
                                    std::to_string(d.relations.size()) + " relations, rows=" +
                                    std::to_string(d.rows) + ", max residual " + d.max_residual +
                                    ", out-of-sample " + d.max_oos_residual);
        } else {
            t.all_dims.push_back(-1);
        }
    }
    return t;
}

}  // namespace mzvlab
