#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mzvlab/bigfixed.hpp"
#include "mzvlab/polylog.hpp"
#include "mzvlab/relations.hpp"

namespace mzvlab {

// Persistent store of evaluated zeta values, keyed by (index, digits).
// Versioned line format: `v1;<index>;<digits>;<decimal value>`; lines
// starting with '#' carry provenance and are ignored on load.
class ValueCache {
public:
    ValueCache() = default;
    explicit ValueCache(std::string path) : path_(std::move(path)) {}

    const std::string& path() const { return path_; }
    std::size_t size() const;

    void load();        // no-op if the file does not exist
    void save() const;  // writes header + all records

    std::optional<BigFixed> get(const Index& k, int digits) const;
    void put(const Index& k, int digits, const BigFixed& v);

    // All stored records, for export and verification sweeps.
    std::vector<std::tuple<Index, int, BigFixed>> records() const;

private:
    std::string path_;
    mutable std::mutex mu_;
    std::map<std::pair<Index, int>, BigFixed> map_;
};

// Cache-aware front end over the bulk Hölder evaluator; one instance is
// pinned to a digit count. Safe to call from one thread; the underlying
// bulk evaluation parallelizes internally.
class Evaluator {
public:
    explicit Evaluator(int digits, int threads = 1, ValueCache* cache = nullptr);

    int digits() const { return digits_; }
    int threads() const { return threads_; }

    BigFixed zeta(const Index& k);

    // Ensures all targets are evaluated (memo + persistent cache).
    void warm(const std::vector<Index>& targets);

    // Exact-rational weighted sum of zeta values at this digit count.
    BigFixed eval_combo(const ZetaCombo& combo);
    std::vector<BigFixed> eval_combos(const std::vector<ZetaCombo>& combos);

    std::size_t evaluations() const { return evaluations_; }

private:
    void ensure(const std::vector<Index>& targets);

    int digits_;
    int threads_;
    ValueCache* cache_;
    std::map<Index, BigFixed> memo_;
    std::size_t evaluations_ = 0;
};

}  // namespace mzvlab
