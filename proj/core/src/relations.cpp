#include "mzvlab/relations.hpp"

#include <algorithm>

namespace mzvlab {

namespace {

// ({2}^a, mid..., {2}^b) style index assembly.
std::vector<int> rep(int value, int count) { return std::vector<int>(static_cast<std::size_t>(count), value); }

void append(std::vector<int>& dst, const std::vector<int>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

std::vector<int> rep_pattern(const std::vector<int>& pattern, int count) {
    std::vector<int> out;
    for (int i = 0; i < count; ++i) append(out, pattern);
    return out;
}

}  // namespace

ZetaCombo ohno_expand(const Index& k, int m) {
    if (!k.admissible()) throw std::invalid_argument("ohno_expand: index not admissible");
    if (m < 0) throw std::invalid_argument("ohno_expand: m must be >= 0");
    ZetaCombo out;
    for (const auto& e : weak_compositions(m, k.depth())) out.add(oplus(k, e), 1);
    return out;
}

ZetaCombo ohno_expand(const IndexSum& s, int m) {
    ZetaCombo out;
    for (const auto& [k, c] : s) {
        for (const auto& e : weak_compositions(m, k.depth())) out.add(oplus(k, e), c);
    }
    return out;
}

ZetaCombo expand_ohno_combo(const OhnoCombo& combo, int m) {
    ZetaCombo out;
    for (const auto& [k, c] : combo.terms()) {
        for (const auto& e : weak_compositions(m, k.depth())) out.add(oplus(k, e), c);
    }
    return out;
}

ZetaCombo gen_ohno(const Index& k, int m) {
    ZetaCombo out = ohno_expand(k, m);
    out -= ohno_expand(dual(k), m);
    return out;
}

OhnoCombo gen_ohno_symbols(const Index& k) {
    OhnoCombo out;
    out.add(k, 1);
    out.add(dual(k), -1);
    return out;
}

ZetaCombo gen_double_ohno(const Index& k, int m1, int m2) {
    if (!is_duplex_word(word_of_index(k)))
        throw std::invalid_argument("gen_double_ohno: (" + k.str() + ") is not in the duplex family");
    auto side = [&](const Index& base) {
        ZetaCombo combo;
        for (const auto& e1 : weak_compositions(m1, base.depth())) {
            Index lifted = oplus(base, e1);
            for (const auto& e2 : weak_compositions(m2, lifted.depth())) combo.add(oplus(lifted, e2), 1);
        }
        return combo;
    };
    return side(k) - side(dual(k));
}

OhnoCombo gen_double_ohno_symbols(const Index& k, int m) {
    if (!is_duplex_word(word_of_index(k)))
        throw std::invalid_argument("gen_double_ohno_symbols: (" + k.str() + ") is not in the duplex family");
    OhnoCombo out;
    for (const auto& e : weak_compositions(m, k.depth())) out.add(oplus(k, e), 1);
    Index kd = dual(k);
    for (const auto& e : weak_compositions(m, kd.depth())) out.add(oplus(kd, e), -1);
    return out;
}

std::vector<Index> enumerate_duplex_indices(int weight) {
    std::vector<Index> out;
    for (const auto& w : enumerate_duplex_words(weight)) out.push_back(index_of_word(w));
    std::sort(out.begin(), out.end());
    return out;
}

ZetaCombo f_m(int s, const Index& k, int m) {
    IndexSum one;
    one.add(k, 1);
    return f_m(s, one, m);
}

ZetaCombo f_m(int s, const IndexSum& k, int m) {
    if (s < 2) throw std::invalid_argument("f_m: s must be >= 2");
    ZetaCombo out;
    for (const auto& [term, c] : k) {
        if (!term.admissible())
            throw std::invalid_argument("f_m: term not admissible: (" + term.str() + ")");
        out += ohno_expand(c * index_shuffle(Index{s}, term), m);
        out -= ohno_expand(c * index_shuffle(Index{s}, dual(term)), m);
    }
    return out;
}

OhnoCombo f_symbols(int s, const IndexSum& k) {
    if (s < 2) throw std::invalid_argument("f_symbols: s must be >= 2");
    OhnoCombo out;
    for (const auto& [term, c] : k) {
        out.add(index_shuffle(Index{s}, term), c);
        out.add(index_shuffle(Index{s}, dual(term)), -c);
    }
    return out;
}

ZetaCombo gen_D(int s, int t, int m) {
    if (s < 2 || t < 2) throw std::invalid_argument("gen_D: s,t must be >= 2");
    ZetaCombo out = f_m(s, Index{t + 1}, m);
    out -= f_m(t, Index{s + 1}, m);
    return out;
}

OhnoCombo gen_D_symbols(int s, int t) {
    if (s < 2 || t < 2) throw std::invalid_argument("gen_D_symbols: s,t must be >= 2");
    IndexSum kt, ks;
    kt.add(Index{t + 1}, 1);
    ks.add(Index{s + 1}, 1);
    OhnoCombo out = f_symbols(s, kt);
    out -= f_symbols(t, ks);
    return out;
}

ZetaCombo f_m_harmonic_form(int s, int t, int m) {
    if (s < 2 || t < 1 || m < 0) throw std::invalid_argument("f_m_harmonic_form: need s>=2, t>=1, m>=0");
    ZetaCombo out;
    out.add(Index{s + t + 1 + m}, -(m + 1));
    for (int m1 = 0; m1 <= m; ++m1) {
        int m2 = m - m1;
        for (int i = 0; i <= t - 2; ++i) {
            std::vector<int> parts = rep(1, i);
            parts.push_back(s + m1 + 1);
            append(parts, rep(1, t - 2 - i));
            parts.push_back(2);
            out += ohno_expand(Index(parts), m2);
        }
        std::vector<int> tail = rep(1, t - 1);
        tail.push_back(s + m1 + 2);
        out += ohno_expand(Index(tail), m2);
    }
    return out;
}

OhnoCombo eq_relation(int id) {
    OhnoCombo out;
    auto put =[&](std::initializer_list<int> parts, int c) { out.add(Index(parts), c); };
    switch (id) {
        case 1:
            put({1, 2, 3}, 1);
            put({1, 3, 2}, 1);
            put({3, 1, 2}, 1);
            put({2, 4}, -1);
            put({3, 3}, -3);
            break;
        case 2:
            put({1, 2, 4}, 1);
            put({1, 4, 2}, 1);
            put({4, 1, 2}, 1);
            put({2, 5}, -1);
            put({3, 4}, -2);
            put({4, 3}, -2);
            break;
        case 3:
            put({2, 3, 2}, 1);
            put({1, 4, 2}, 1);
            put({1, 3, 3}, 1);
            put({3, 1, 3}, -1);
            put({2, 2, 3}, -1);
            put({2, 1, 4}, -1);
            break;
        default:
            throw std::invalid_argument("eq_relation: id must be 1, 2 or 3");
    }
    return out;
}

namespace {

OhnoCombo conj41_symbols(int s, int m, int n) {
    if (s < 2 || m < 0 || n < 0) throw std::invalid_argument("conj4.1: need s>=2, m,n>=0");
    OhnoCombo out;
    std::vector<int> lhs1 = rep(2, m);
    lhs1.push_back(1);
    append(lhs1, rep(2, n + 1));
    std::vector<int> lhs2 = rep(2, n);
    lhs2.push_back(3);
    append(lhs2, rep(2, m));
    out.add(index_shuffle(Index{s}, Index(lhs1)), 1);
    out.add(index_shuffle(Index{s}, Index(lhs2)), -1);
    for (int a = 2; a <= s + 3 - 3; ++a) {
        int b = s + 3 - a;  // a >= 2, b >= 3
        for (int i = 0; i <= m; ++i) {
            int j = m - i;
            std::vector<int> parts = rep(2, i);
            parts.push_back(a);
            append(parts, rep(2, n));
            parts.push_back(b);
            append(parts, rep(2, j));
            out.add(Index(parts), -1);
        }
        for (int i = 0; i <= m - 1; ++i) {
            int j = m - 1 - i;
            std::vector<int> parts = rep(2, i);
            parts.push_back(a);
            append(parts, rep(2, n + 1));
            parts.push_back(b);
            append(parts, rep(2, j));
            out.add(Index(parts), 1);
        }
    }
    return out;
}

OhnoCombo conj42_symbols(int s, int n) {
    if (s < 3 || n < 0) throw std::invalid_argument("conj4.2: need s>=3, n>=0");
    OhnoCombo out;
    out.add(index_shuffle(Index{s}, Index(rep_pattern({3}, n))), 1);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
            int k = n - i - j;
            std::vector<int> mins(static_cast<std::size_t>(j + 1), 2);
            mins.back() = 3;
            for (const auto& a : bounded_compositions(s + 3 * j, mins)) {
                std::vector<int> parts = rep_pattern({1, 2}, i);
                append(parts, a);
                append(parts, rep_pattern({1, 2}, k));
                out.add(Index(parts), (j % 2 == 0) ? -1 : 1);
            }
        }
    }
    for (int i = 0; i + 1 <= n; ++i) {
        for (int j = 0; i + j + 1 <= n; ++j) {
            int k = n - 1 - i - j;
            std::vector<int> mins(static_cast<std::size_t>(j + 1), 2);
            for (const auto& a : bounded_compositions(s + 3 * j, mins)) {
                std::vector<int> parts = rep_pattern({1, 2}, i);
                parts.push_back(1);
                append(parts, a);
                parts.push_back(2);
                append(parts, rep_pattern({1, 2}, k));
                out.add(Index(parts), (j % 2 == 0) ? -1 : 1);
            }
        }
    }
    return out;
}

OhnoCombo conj43_symbols(int s) {
    if (s < 2) throw std::invalid_argument("conj4.3: need s>=2");
    OhnoCombo out;
    out.add(index_shuffle(Index{s}, Index{1, 1, 3}), 1);
    out.add(index_shuffle(Index{s}, Index{1, 4}), -1);
    for (int a = 1; a <= s; ++a) out.add(Index{a, s + 3 - a, 2}, 1);  // b = s+3-a >= 3
    for (int a = 2; a <= s + 1; ++a) out.add(Index{a, 1, s + 4 - a}, -1);  // b >= 3
    for (int a = 2; a <= s; ++a) out.add(Index{a, s + 2 - a, 3}, -1);  // b >= 2
    return out;
}

OhnoCombo conj44_symbols(int s) {
    if (s < 2) throw std::invalid_argument("conj4.4: need s>=2");
    OhnoCombo out;
    out.add(index_shuffle(Index{s}, Index{4, 2}), 1);
    out.add(index_shuffle(Index{s}, Index{2, 1, 1, 2}), -1);
    for (int a = 1; a <= s + 1; ++a) out.add(Index{a, s + 2 - a, 2, 2}, -1);    // a,b >= 1
    for (int a = 2; a <= s; ++a) out.add(Index{a, 2, s + 2 - a, 2}, 1);          // a,b >= 2
    for (int a = 2; a <= s + 1; ++a) out.add(Index{2, a, 1, s + 3 - a}, 1);     // a,b >= 2
    for (int a = 2; a <= s; ++a) out.add(Index{a, s + 3 - a, 1, 2}, 1);          // b >= 3
    for (int a = 3; a <= s + 1; ++a) out.add(Index{a, 1, 2, s + 3 - a}, -1);     // a >= 3, b >= 2
    for (int a = 2; a <= s + 1; ++a) out.add(Index{a, s + 4 - a, 2}, 1);         // b >= 3
    out.add(Index{3, 2, s + 1}, -1);
    out.add(Index{s + 1, 2, 3}, 1);
    return out;
}

OhnoCombo conj45_symbols(int s, int t, int m) {
    if (s < 2 || t < 2 || m < 0) throw std::invalid_argument("conj4.5: need s,t>=2, m>=0");
    OhnoCombo out = f_symbols(s, index_shuffle(Index(rep(2, m)), Index{t + 1}));
    out -= f_symbols(t, index_shuffle(Index(rep(2, m)), Index{s + 1}));
    return out;
}

}  // namespace

ConjCombo gen_conjecture(int which, const ConjParams& p, int coeff) {
    if (coeff < 0) throw std::invalid_argument("gen_conjecture: coefficient must be >= 0");
    OhnoCombo sym;
    bool degenerate = false;
    switch (which) {
        case 1: sym = conj41_symbols(p.s, p.m, p.n); break;
        case 2:
            sym = conj42_symbols(p.s, p.n);
            degenerate = (p.n == 0);  // both sides collapse to O(s); reported, not asserted
            break;
        case 3: sym = conj43_symbols(p.s); break;
        case 4: sym = conj44_symbols(p.s); break;
        case 5: sym = conj45_symbols(p.s, p.t, p.m); break;
        default: throw std::invalid_argument("gen_conjecture: family must be 1..5");
    }
    return ConjCombo{expand_ohno_combo(sym, coeff), degenerate};
}

const std::vector<FamilyInfo>& family_registry() {
    static const std::vector<FamilyInfo> families = {
        {"ohno", false},     {"double-ohno", false}, {"thm1.8", false},
        {"eq1.1", false},    {"eq1.2", false},       {"eq1.3", false},
        {"lemma3.2", false}, {"lemma3.3", false},    {"conj4.1", true},
        {"conj4.2", true},   {"conj4.3", true},      {"conj4.4", true},
        {"conj4.5", true},
    };
    return families;
}

bool is_known_family(const std::string& id) {
    for (const auto& f : family_registry())
        if (f.id == id) return true;
    return false;
}

bool is_conjectural_family(const std::string& id) {
    for (const auto& f : family_registry())
        if (f.id == id) return f.conjectural;
    throw std::invalid_argument("unknown family id: " + id);
}

}  // namespace mzvlab
