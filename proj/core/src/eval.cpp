#include "mzvlab/eval.hpp"

#include <fstream>
#include <stdexcept>

namespace mzvlab {

std::size_t ValueCache::size() const {
    std::lock_guard lk(mu_);
    return map_.size();
}

void ValueCache::load() {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return;
    std::lock_guard lk(mu_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        // v1;<index>;<digits>;<value>
        std::size_t a = line.find(';');
        std::size_t b = line.find(';', a + 1);
        std::size_t c = line.find(';', b + 1);
        if (a == std::string::npos || b == std::string::npos || c == std::string::npos)
            throw std::runtime_error("ValueCache: malformed line: " + line);
        if (line.substr(0, a) != "v1")
            throw std::runtime_error("ValueCache: unsupported record version in: " + line);
        Index k = Index::parse(line.substr(a + 1, b - a - 1));
        int digits = std::stoi(line.substr(b + 1, c - b - 1));
        BigFixed v = BigFixed::parse(line.substr(c + 1));
        if (v.scale() != digits)
            throw std::runtime_error("ValueCache: digit count does not match value in: " + line);
        map_[{std::move(k), digits}] = std::move(v);
    }
}

void ValueCache::save() const {
    if (path_.empty()) return;
    std::lock_guard lk(mu_);
    std::ofstream out(path_, std::ios::trunc);
    if (!out) throw std::runtime_error("ValueCache: cannot write " + path_);
    out << "# mzv value cache\n";
    out << "# method=holder-convolution-1/2; truncation=2*M^depth*2^-M<10^-(D+g/2); guard=10+weight\n";
    for (const auto& [key, v] : map_)
        out << "v1;" << key.first.str() << ';' << key.second << ';' << v.str() << '\n';
}

std::optional<BigFixed> ValueCache::get(const Index& k, int digits) const {
    std::lock_guard lk(mu_);
    auto it = map_.find({k, digits});
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void ValueCache::put(const Index& k, int digits, const BigFixed& v) {
    std::lock_guard lk(mu_);
    map_[{k, digits}] = v;
}

std::vector<std::tuple<Index, int, BigFixed>> ValueCache::records() const {
    std::lock_guard lk(mu_);
    std::vector<std::tuple<Index, int, BigFixed>> out;
    out.reserve(map_.size());
    for (const auto& [key, v] : map_) out.emplace_back(key.first, key.second, v);
    return out;
}

Evaluator::Evaluator(int digits, int threads, ValueCache* cache)
    : digits_(digits), threads_(threads), cache_(cache) {
    if (digits < 1) throw std::invalid_argument("Evaluator: digits must be positive");
}

void Evaluator::ensure(const std::vector<Index>& targets) {
    std::vector<Index> missing;
    for (const auto& k : targets) {
        if (memo_.count(k)) continue;
        if (cache_) {
            if (auto v = cache_->get(k, digits_)) {
                memo_.emplace(k, *v);
                continue;
            }
        }
        missing.push_back(k);
    }
    if (missing.empty()) return;
    BulkOptions opt;
    opt.digits = digits_;
    opt.threads = threads_;
    auto values = holder_evaluate(missing, opt);
    evaluations_ += values.size();
    for (auto& [k, v] : values) {
        if (cache_) cache_->put(k, digits_, v);
        memo_.emplace(k, std::move(v));
    }
}

BigFixed Evaluator::zeta(const Index& k) {
    if (!k.admissible())
        throw std::invalid_argument("zeta: index not admissible (series diverges): (" + k.str() + ")");
    ensure({k});
    return memo_.at(k);
}

void Evaluator::warm(const std::vector<Index>& targets) { ensure(targets); }

BigFixed Evaluator::eval_combo(const ZetaCombo& combo) {
    std::vector<Index> targets;
    targets.reserve(combo.size());
    for (const auto& [k, c] : combo.terms()) targets.push_back(k);
    ensure(targets);
    BigFixed sum = BigFixed::zero(digits_);
    for (const auto& [k, c] : combo.terms()) sum += memo_.at(k).mul_rational(c);
    return sum;
}

std::vector<BigFixed> Evaluator::eval_combos(const std::vector<ZetaCombo>& combos) {
    std::vector<Index> targets;
    for (const auto& combo : combos)
        for (const auto& [k, c] : combo.terms()) targets.push_back(k);
    ensure(targets);
    std::vector<BigFixed> out;
    out.reserve(combos.size());
    for (const auto& combo : combos) {
        BigFixed sum = BigFixed::zero(digits_);
        for (const auto& [k, c] : combo.terms()) sum += memo_.at(k).mul_rational(c);
        out.push_back(std::move(sum));
    }
    return out;
}

}  // namespace mzvlab
