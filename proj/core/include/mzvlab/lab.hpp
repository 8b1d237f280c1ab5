#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mzvlab/eval.hpp"
#include "mzvlab/exact_linalg.hpp"
#include "mzvlab/relations.hpp"

namespace mzvlab {

// Raised when numeric residuals land between the accept and reject bands;
// the run must be repeated with more digits.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational coordinates over the canonical admissible basis of one
// weight, at either the zeta-symbol or O-symbol level.
struct RelationVector {
    int weight = 0;
    SymbolLevel level = SymbolLevel::zeta;
    RatVec coords;  // length 2^(weight-2), basis order from enumerate_admissible
};

RelationVector to_vector(const ZetaCombo& combo, int weight);
RelationVector to_vector(const OhnoCombo& combo, int weight);

// Dimension of span{ O(k) - O(dual k) : weight(k) = n }, by orbit counting:
// each duality orbit of size two contributes one dimension.
long ohno_span_dim(int n);

// Exact membership of v in span(generators); a certificate (coordinates in
// the generator list) is written through `certificate` when provided.
bool span_membership(const RelationVector& v, const std::vector<RelationVector>& generators,
                     RatVec* certificate = nullptr);

int rank(const std::vector<RelationVector>& vectors);

// O-symbol-level vectors of all proved families at one weight: duality,
// the aggregated duplex family, and the symmetric-sum family.
std::vector<RelationVector> proved_family_vectors(int weight);
std::vector<RelationVector> ohno_generator_vectors(int weight);

struct DiscoveredRelation {
    std::vector<long> coeffs;   // O-symbol coordinates over the weight-n basis
    long height = 0;            // max |coeff|
    std::string residual;       // max residual over the sample rows (short decimal)
    std::string oos_residual;   // max residual over the out-of-sample rows
};

struct DiscoveryResult {
    int weight = 0;
    int rows = 0;    // coefficient rows used in the lattice
    int digits = 0;
    std::vector<DiscoveredRelation> relations;  // independent set
    std::string max_residual = "0";      // worst sample-row residual over the set
    std::string max_oos_residual = "0";  // worst held-out residual over the set
    bool contains_ohno_span = false;
    bool contains_proved_families = false;
    bool stable_at_higher_digits = false;
    bool out_of_sample_ok = false;
};

// Integer-relation discovery over the weight-n O-symbol basis: fills the
// coefficient matrix numerically, reduces [I | C * V^T] with LLL and keeps
// short rows that vanish to 10^(-digits/2); soundness gates per result
// flags. rows < 0 selects basis size + 8 (the minimum accepted).
DiscoveryResult discover_relations(int n, int rows, int digits, int threads = 1);

struct Table1 {
    std::vector<int> weights;        // 2..13
    std::vector<long> ohno_dims;     // exact, all weights
    std::vector<long> all_dims;      // discovered, up to weight_max; -1 beyond
    std::vector<std::string> diagnostics;  // per discovered weight: residual summary
};

Table1 table1(int weight_max, int digits, int rows = -1, int threads = 1);

}  // namespace mzvlab
