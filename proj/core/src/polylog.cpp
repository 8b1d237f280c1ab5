#include "mzvlab/polylog.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace mzvlab {

int series_truncation(int depth, int prec) {
    if (depth < 1) depth = 1;
    if (prec < 1) prec = 1;
    BigInt tenp = pow10(static_cast<unsigned long>(prec));
    for (int m = std::max(8, depth + 1);; ++m) {
        BigInt lhs;
        mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(depth));
        lhs *= 2;
        lhs *= tenp;
        BigInt rhs;
        mpz_ui_pow_ui(rhs.get_mpz_t(), 2, static_cast<unsigned long>(m));
        if (lhs < rhs) return m;
    }
}

SeriesEngine::SeriesEngine(int scale, int trunc) : scale_(scale), trunc_(trunc) {
    ten_scale_ = pow10(static_cast<unsigned long>(scale_));
    // Mantissas of 2^-m; entries past the underflow point are exact zeros and
    // contribute nothing, so the working table is clipped there.
    half_pow_.resize(static_cast<std::size_t>(trunc_) + 1);
    BigInt cur = ten_scale_;
    int last_nonzero = 0;
    for (int m = 1; m <= trunc_; ++m) {
        mpz_tdiv_q_2exp(cur.get_mpz_t(), cur.get_mpz_t(), 1);
        half_pow_[static_cast<std::size_t>(m)] = cur;
        if (sgn(cur) != 0) last_nonzero = m;
        if (sgn(cur) == 0) break;
    }
    if (last_nonzero < trunc_) {
        trunc_ = last_nonzero;
        half_pow_.resize(static_cast<std::size_t>(trunc_) + 1);
    }
}

void SeriesEngine::initial(Table& t) const {
    t.assign(static_cast<std::size_t>(trunc_) + 1, BigInt());
    for (int m = 1; m <= trunc_; ++m)
        mpz_tdiv_q_ui(t[static_cast<std::size_t>(m)].get_mpz_t(), ten_scale_.get_mpz_t(),
                      static_cast<unsigned long>(m));
}

void SeriesEngine::step_x(Table& t) const {
    for (int m = 2; m <= trunc_; ++m) {
        auto& v = t[static_cast<std::size_t>(m)];
        mpz_tdiv_q_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m));
    }
    // m = 1 divides by 1: unchanged.
}

void SeriesEngine::step_y(const Table& in, Table& out) const {
    out.assign(static_cast<std::size_t>(trunc_) + 1, BigInt());
    BigInt acc(0);
    for (int m = 1; m <= trunc_; ++m) {
        if (m > 1) acc += in[static_cast<std::size_t>(m - 1)];
        mpz_tdiv_q_ui(out[static_cast<std::size_t>(m)].get_mpz_t(), acc.get_mpz_t(),
                      static_cast<unsigned long>(m));
    }
}

BigInt SeriesEngine::value_of(const Table& t) const {
    BigInt acc(0);
    for (int m = 1; m <= trunc_; ++m)
        mpz_addmul(acc.get_mpz_t(), t[static_cast<std::size_t>(m)].get_mpz_t(),
                   half_pow_[static_cast<std::size_t>(m)].get_mpz_t());
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), acc.get_mpz_t(), ten_scale_.get_mpz_t());
    return q;
}

BigFixed polylog_half(const Index& c, int digits, int guard) {
    if (c.empty()) throw std::invalid_argument("polylog_half: empty index");
    if (guard < 0) guard = 10 + c.weight();
    int scale = digits + guard;
    int trunc = series_truncation(c.depth(), digits + guard / 2);
    SeriesEngine eng(scale, trunc);
    const std::string w = word_of_index(c).letters();
    SeriesEngine::Table t, u;
    eng.initial(t);
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == 'x') {
            eng.step_x(t);
        } else {
            eng.step_y(t, u);
            std::swap(t, u);
        }
    }
    return BigFixed(eng.value_of(t), scale).rounded(digits);
}

namespace {

// Prefix trie over all polylog words of a batch. Child 0 = 'x', 1 = 'y'.
struct Trie {
    struct Node {
        int32_t child[2] = {-1, -1};
    };
    std::vector<Node> nodes;
    std::vector<BigInt> value;  // mantissa of P(word at node)

    Trie() { nodes.emplace_back(); }

    int insert(const std::string& letters) {
        int cur = 0;
        for (char ch : letters) {
            int l = (ch == 'y') ? 1 : 0;
            int32_t nxt = nodes[static_cast<std::size_t>(cur)].child[l];
            if (nxt < 0) {
                nxt = static_cast<int32_t>(nodes.size());
                nodes[static_cast<std::size_t>(cur)].child[l] = nxt;
                nodes.emplace_back();
            }
            cur = nxt;
        }
        return cur;
    }

    int walk(const std::string& letters) const {
        int cur = 0;
        for (char ch : letters) {
            cur = nodes[static_cast<std::size_t>(cur)].child[(ch == 'y') ? 1 : 0];
            if (cur < 0) throw std::logic_error("Trie::walk: missing path");
        }
        return cur;
    }
};

// Computes values for every node strictly below `node`, whose own table is `t`.
void dfs_fill(const Trie::Node* nodes, std::vector<BigInt>& value, const SeriesEngine& eng,
              int node, const SeriesEngine::Table& t) {
    const auto& nd = nodes[node];
    if (int c = nd.child[0]; c >= 0) {
        SeriesEngine::Table nt = t;
        eng.step_x(nt);
        value[static_cast<std::size_t>(c)] = eng.value_of(nt);
        dfs_fill(nodes, value, eng, c, nt);
    }
    if (int c = nd.child[1]; c >= 0) {
        SeriesEngine::Table nt;
        eng.step_y(t, nt);
        value[static_cast<std::size_t>(c)] = eng.value_of(nt);
        dfs_fill(nodes, value, eng, c, nt);
    }
}

struct SubtreeJob {
    int node;
    std::string path;  // letters from the root to `node`
};

void collect_jobs(const Trie& trie, int node, std::string& path, int cut,
                  std::vector<SubtreeJob>& jobs) {
    if (static_cast<int>(path.size()) == cut) {
        jobs.push_back({node, path});
        return;
    }
    const auto& nd = trie.nodes[static_cast<std::size_t>(node)];
    for (int l = 0; l < 2; ++l) {
        if (nd.child[l] < 0) continue;
        path.push_back(l == 1 ? 'y' : 'x');
        collect_jobs(trie, nd.child[l], path, cut, jobs);
        path.pop_back();
    }
}

// Rebuilds the table chain along `path` (path is nonempty and starts with 'y').
SeriesEngine::Table table_along(const SeriesEngine& eng, const std::string& path) {
    SeriesEngine::Table t, u;
    eng.initial(t);
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (path[i] == 'x') {
            eng.step_x(t);
        } else {
            eng.step_y(t, u);
            std::swap(t, u);
        }
    }
    return t;
}

}  // namespace

std::map<Index, BigFixed> holder_evaluate(const std::vector<Index>& targets, const BulkOptions& opt) {
    std::map<Index, BigFixed> out;
    if (targets.empty()) return out;

    int max_weight = 0;
    int max_depth = 1;
    for (const auto& k : targets) {
        if (!k.admissible())
            throw std::invalid_argument("holder_evaluate: target not admissible: (" + k.str() + ")");
        max_weight = std::max(max_weight, k.weight());
        max_depth = std::max({max_depth, k.depth(), k.weight() - k.depth()});
    }

    int guard = std::max(opt.guard, 10 + max_weight);
    int scale = opt.digits + guard;
    int trunc = series_truncation(max_depth, opt.digits + guard / 2);
    SeriesEngine eng(scale, trunc);

    // One trie over the prefixes of I(k) and tau(I(k)) for all targets; the
    // suffix factors of the convolution are exactly the prefixes of the
    // tau word, so no other polylog values are needed.
    Trie trie;
    struct Pair {
        const Index* k;
        std::string w, tw;
    };
    std::vector<Pair> pairs;
    pairs.reserve(targets.size());
    for (const auto& k : targets) {
        if (out.count(k)) continue;
        out.emplace(k, BigFixed());  // dedup placeholder
        Word w = word_of_index(k);
        pairs.push_back({&k, w.letters(), tau(w).letters()});
        trie.insert(pairs.back().w);
        trie.insert(pairs.back().tw);
    }
    trie.value.assign(trie.nodes.size(), BigInt());

    // Parallel fill: subtrees rooted at a shallow cut run independently.
    int threads = std::max(1, opt.threads);
    int cut = 0;
    if (threads > 1) {
        cut = 1;
        while (cut < 12) {
            std::vector<SubtreeJob> probe;
            std::string path;
            collect_jobs(trie, 0, path, cut, probe);
            if (static_cast<int>(probe.size()) >= 4 * threads || probe.empty()) break;
            ++cut;
        }
    }
    {
        // Sequential part: nodes at depth <= cut.
        struct Frame {
            int node;
            SeriesEngine::Table table;
        };
        auto shallow = [&](auto&& self, int node, const SeriesEngine::Table& t, int depth) -> void {
            if (depth == cut) return;
            const auto& nd = trie.nodes[static_cast<std::size_t>(node)];
            if (int c = nd.child[0]; c >= 0) {
                SeriesEngine::Table nt = t;
                eng.step_x(nt);
                trie.value[static_cast<std::size_t>(c)] = eng.value_of(nt);
                self(self, c, nt, depth + 1);
            }
            if (int c = nd.child[1]; c >= 0) {
                SeriesEngine::Table nt;
                if (node == 0)
                    eng.initial(nt);
                else
                    eng.step_y(t, nt);
                trie.value[static_cast<std::size_t>(c)] = eng.value_of(nt);
                self(self, c, nt, depth + 1);
            }
        };
        SeriesEngine::Table root;  // unused at the real root
        if (cut != 0) shallow(shallow, 0, root, 0);
    }
    if (cut == 0) {
        // Single-threaded: one DFS from the root.
        const auto& nd = trie.nodes[0];
        if (int c = nd.child[1]; c >= 0) {
            SeriesEngine::Table t;
            eng.initial(t);
            trie.value[static_cast<std::size_t>(c)] = eng.value_of(t);
            dfs_fill(trie.nodes.data(), trie.value, eng, c, t);
        }
    } else {
        std::vector<SubtreeJob> jobs;
        std::string path;
        collect_jobs(trie, 0, path, cut, jobs);
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                SeriesEngine::Table t = table_along(eng, jobs[i].path);
                dfs_fill(trie.nodes.data(), trie.value, eng, jobs[i].node, t);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Convolution assembly: zeta(k) = sum_j P(w[0:j]) * P(tau(w)[0:n-j]).
    const BigInt& unit = eng.unit();
    for (const auto& p : pairs) {
        int n = static_cast<int>(p.w.size());
        std::vector<const BigInt*> vu(static_cast<std::size_t>(n) + 1), vr(static_cast<std::size_t>(n) + 1);
        vu[0] = &unit;
        vr[0] = &unit;
        int cu = 0, cr = 0;
        for (int j = 1; j <= n; ++j) {
            cu = trie.nodes[static_cast<std::size_t>(cu)].child[p.w[static_cast<std::size_t>(j - 1)] == 'y'];
            cr = trie.nodes[static_cast<std::size_t>(cr)].child[p.tw[static_cast<std::size_t>(j - 1)] == 'y'];
            vu[static_cast<std::size_t>(j)] = &trie.value[static_cast<std::size_t>(cu)];
            vr[static_cast<std::size_t>(j)] = &trie.value[static_cast<std::size_t>(cr)];
        }
        BigInt acc(0);
        for (int j = 0; j <= n; ++j)
            mpz_addmul(acc.get_mpz_t(), vu[static_cast<std::size_t>(j)]->get_mpz_t(),
                       vr[static_cast<std::size_t>(n - j)]->get_mpz_t());
        BigInt mant;
        mpz_tdiv_q(mant.get_mpz_t(), acc.get_mpz_t(), unit.get_mpz_t());
        out[*p.k] = BigFixed(std::move(mant), scale).rounded(opt.digits);
    }
    return out;
}

}  // namespace mzvlab
