#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzvlab/index.hpp"
#include "mzvlab/word.hpp"

namespace mzvlab {

// A formal rational combination of admissible indices, all of one weight.
// The Level tag keeps zeta-level combinations (sums of zeta symbols) and
// Ohno-level combinations (sums of O symbols, i.e. one identity per series
// coefficient) from being mixed by accident.
enum class SymbolLevel { zeta, ohno };

template <SymbolLevel L>
class SymbolCombo {
public:
    SymbolCombo() = default;

    void add(const Index& k, const Rational& c) {
        if (!k.admissible())
            throw std::invalid_argument("SymbolCombo: term not admissible: (" + k.str() + ")");
        if (terms_.is_zero())
            weight_ = k.weight();
        else if (k.weight() != weight_)
            throw std::invalid_argument("SymbolCombo: mixed weights " + std::to_string(weight_) +
                                        " and " + std::to_string(k.weight()));
        terms_.add(k, c);
        if (terms_.is_zero()) weight_ = 0;
    }

    void add(const IndexSum& s, const Rational& scale = 1) {
        for (const auto& [k, c] : s) add(k, c * scale);
    }

    const LinComb<Index>& terms() const { return terms_; }
    bool is_zero() const { return terms_.is_zero(); }
    std::size_t size() const { return terms_.size(); }
    // Common weight of the terms; 0 for the empty combination.
    int weight() const { return terms_.is_zero() ? 0 : weight_; }
    std::string str() const { return terms_.str(); }

    SymbolCombo& operator+=(const SymbolCombo& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    SymbolCombo& operator-=(const SymbolCombo& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend SymbolCombo operator-(SymbolCombo a, const SymbolCombo& b) { return a -= b; }
    friend SymbolCombo operator+(SymbolCombo a, const SymbolCombo& b) { return a += b; }
    friend bool operator==(const SymbolCombo& a, const SymbolCombo& b) {
        return a.terms_ == b.terms_;
    }

private:
    LinComb<Index> terms_;
    int weight_ = 0;
};

using ZetaCombo = SymbolCombo<SymbolLevel::zeta>;
using OhnoCombo = SymbolCombo<SymbolLevel::ohno>;

// --- Ohno sums -------------------------------------------------------------

// Coefficient m of the Ohno series of k: the formal sum of zeta(k+e) over
// all e >= 0 with |e| = m. Requires k admissible.
ZetaCombo ohno_expand(const Index& k, int m);

// Linear extension over an IndexSum of admissible indices.
ZetaCombo ohno_expand(const IndexSum& s, int m);

// Coefficient m of an Ohno-level combination: expand every O symbol.
ZetaCombo expand_ohno_combo(const OhnoCombo& combo, int m);

// --- Relation generators ----------------------------------------------------
// Each generator returns a zeta-level combination that is expected to vanish
// under evaluation (proved families) or conjectured to (see gen_conjecture).

// Duality of Ohno sums at coefficient m: O_m(k) - O_m(dual(k)).
ZetaCombo gen_ohno(const Index& k, int m);
OhnoCombo gen_ohno_symbols(const Index& k);

// Double lift of the duplex family at split coefficients (m1, m2):
// sum of zeta(k+e1+e2) over |e1|=m1, |e2|=m2, minus the dual side.
// Requires I(k) to be a duplex word.
ZetaCombo gen_double_ohno(const Index& k, int m1, int m2);

// Aggregated single-m form at the O-symbol level:
// sum over |e|=m of O(k+e) minus the dual side.
OhnoCombo gen_double_ohno_symbols(const Index& k, int m);

// All duplex-family indices of the given weight (weight must be even to
// yield any; returned in canonical order).
std::vector<Index> enumerate_duplex_indices(int weight);

// F_m(s; k) = O_m((s) sh k) - O_m((s) sh k^dagger); the IndexSum overload
// extends linearly with the dagger applied per term.
ZetaCombo f_m(int s, const Index& k, int m);
ZetaCombo f_m(int s, const IndexSum& k, int m);
OhnoCombo f_symbols(int s, const IndexSum& k);

// D_m(s,t) = F_m(s;(t+1)) - F_m(t;(s+1)); antisymmetric in (s,t).
ZetaCombo gen_D(int s, int t, int m);
OhnoCombo gen_D_symbols(int s, int t);

// Right-hand side of the closed form for F_m(s;(t+1)) obtained from the
// harmonic product (valid for s >= 2, t >= 1): used as a numeric cross-check.
ZetaCombo f_m_harmonic_form(int s, int t, int m);

// The three fixed weight-6/7 relations quoted verbatim as O-symbol vectors;
// id in {1,2,3}.
OhnoCombo eq_relation(int id);

// --- Conjectural families ----------------------------------------------------

struct ConjParams {
    int s = 0;
    int t = 0;
    int m = 0;
    int n = 0;
};

struct ConjCombo {
    ZetaCombo combo;       // LHS - RHS at the given Ohno coefficient
    bool degenerate = false;  // boundary case resolved by convention (flagged in reports)
};

// Families conj4.1 .. conj4.5 (which = 1..5) at Ohno coefficient `coeff`.
// Parameter ranges: s >= 2 (>= 3 for which == 2), m,n >= 0; t only for 5.
ConjCombo gen_conjecture(int which, const ConjParams& p, int coeff);

// --- Generator registry -------------------------------------------------------

struct FamilyInfo {
    std::string id;     // stable CLI id
    bool conjectural;
};

const std::vector<FamilyInfo>& family_registry();
bool is_known_family(const std::string& id);
bool is_conjectural_family(const std::string& id);

}  // namespace mzvlab
