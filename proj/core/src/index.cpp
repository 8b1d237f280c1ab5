#include "mzvlab/index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mzvlab {

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("Index: every part must be >= 1");
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Index::Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

Index Index::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string piece(text.substr(pos, comma - pos));
        if (piece.empty()) throw std::invalid_argument("Index::parse: empty part in '" + std::string(text) + "'");
        std::size_t used = 0;
        int v = std::stoi(piece, &used);
        if (used != piece.size()) throw std::invalid_argument("Index::parse: bad part '" + piece + "'");
        parts.push_back(v);
        pos = comma + 1;
    }
    return Index(std::move(parts));
}

std::string Index::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::strong_ordering operator<=>(const Index& a, const Index& b) {
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                  b.parts_.begin(), b.parts_.end());
}

namespace {

// Block decomposition of an admissible index: k = (1^{a_1-1}, b_1+1, ...,
// 1^{a_l-1}, b_l+1) with all a_p, b_q >= 1.
std::vector<std::pair<int, int>> admissible_blocks(const Index& k) {
    std::vector<std::pair<int, int>> blocks;
    const auto& p = k.parts();
    std::size_t i = 0;
    while (i < p.size()) {
        int a = 1;
        while (i < p.size() && p[i] == 1) {
            ++a;
            ++i;
        }
        // Admissibility guarantees a part >= 2 terminates every block.
        int b = p[i] - 1;
        blocks.emplace_back(a, b);
        ++i;
    }
    return blocks;
}

}  // namespace

Index dual(const Index& k) {
    if (!k.admissible()) throw std::invalid_argument("dual: index not admissible: (" + k.str() + ")");
    auto blocks = admissible_blocks(k);
    std::vector<int> out;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        auto [a, b] = *it;
        for (int j = 0; j < b - 1; ++j) out.push_back(1);
        out.push_back(a + 1);
    }
    return Index(std::move(out));
}

Index hoffman_dual(const Index& k) {
    if (k.empty()) throw std::invalid_argument("hoffman_dual: empty index");
    // Write the weight as w unit cells separated by w-1 symbols, each either
    // "join" (cells belong to the same part) or "cut" (start a new part);
    // Hoffman's dual swaps the two symbol kinds.
    const auto& p = k.parts();
    std::vector<bool> join;
    join.reserve(k.weight() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (int j = 0; j < p[i] - 1; ++j) join.push_back(true);
        if (i + 1 < p.size()) join.push_back(false);
    }
    std::vector<int> out{1};
    for (bool j : join) {
        if (!j)
            out.back() += 1;
        else
            out.push_back(1);
    }
    return Index(std::move(out));
}

Index minus_last(const Index& k) {
    if (!k.admissible()) throw std::invalid_argument("minus_last: index not admissible");
    auto p = k.parts();
    p.back() -= 1;
    return Index(std::move(p));
}

Index oplus(const Index& k, const std::vector<int>& e) {
    if (static_cast<int>(e.size()) != k.depth())
        throw std::invalid_argument("oplus: length mismatch");
    auto p = k.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (e[i] < 0) throw std::invalid_argument("oplus: negative entry");
        p[i] += e[i];
    }
    return Index(std::move(p));
}

std::vector<Index> enumerate_admissible(int n) {
    if (n < 2) throw std::invalid_argument("enumerate_admissible: weight must be >= 2");
    std::vector<Index> out;
    // Depth-major, lexicographic within a depth: this matches the canonical
    // (weight, depth, lex) order since all results share weight n.
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int slots) -> void {
        if (slots == 1) {
            if (remaining >= 2) {
                cur.push_back(remaining);
                out.emplace_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (int v = 1; v <= remaining - slots; ++v) {
            // Leave at least slots-1 units behind, of which the last needs 2.
            cur.push_back(v);
            self(self, remaining - v, slots - 1);
            cur.pop_back();
        }
    };
    for (int d = 1; d <= n - 1; ++d) rec(rec, n, d);
    return out;
}

std::vector<Index> enumerate_compositions(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_compositions: weight must be >= 1");
    std::vector<Index> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int slots) -> void {
        if (slots == 1) {
            cur.push_back(remaining);
            out.emplace_back(cur);
            cur.pop_back();
            return;
        }
        for (int v = 1; v <= remaining - slots + 1; ++v) {
            cur.push_back(v);
            self(self, remaining - v, slots - 1);
            cur.pop_back();
        }
    };
    for (int d = 1; d <= n; ++d) rec(rec, n, d);
    return out;
}

IndexSum index_shuffle(const Index& k, const Index& l) {
    IndexSum out;
    const auto& a = k.parts();
    const auto& b = l.parts();
    std::vector<int> cur;
    cur.reserve(a.size() + b.size());
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == a.size() && j == b.size()) {
            out.add(Index(cur), 1);
            return;
        }
        if (i < a.size()) {
            cur.push_back(a[i]);
            self(self, i + 1, j);
            cur.pop_back();
        }
        if (j < b.size()) {
            cur.push_back(b[j]);
            self(self, i, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

IndexSum harmonic_single(int k, const Index& l) {
    if (l.empty()) throw std::invalid_argument("harmonic_single: right factor must be nonempty");
    if (k < 1) throw std::invalid_argument("harmonic_single: entry must be >= 1");
    IndexSum out = index_shuffle(Index{k}, l);
    for (int i = 0; i < l.depth(); ++i) {
        auto p = l.parts();
        p[i] += k;
        out.add(Index(std::move(p)), 1);
    }
    return out;
}

std::vector<std::vector<int>> weak_compositions(int m, int len) {
    std::vector<std::vector<int>> out;
    if (m < 0 || len < 0) throw std::invalid_argument("weak_compositions: negative argument");
    if (len == 0) {
        if (m == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(len, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == len - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, m);
    return out;
}

std::vector<std::vector<int>> bounded_compositions(int total, const std::vector<int>& mins) {
    std::vector<std::vector<int>> out;
    int base = std::accumulate(mins.begin(), mins.end(), 0);
    if (total < base) return out;
    for (auto& e : weak_compositions(total - base, static_cast<int>(mins.size()))) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += mins[i];
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace mzvlab
