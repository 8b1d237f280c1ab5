#include "mzvlab/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace mzvlab {

Word::Word(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_)
        if (c != 'x' && c != 'y')
            throw std::invalid_argument("Word: letters must be 'x' or 'y'");
}

Word word_of_index(const Index& k) {
    if (k.empty()) return Word();
    std::string s;
    s.reserve(static_cast<std::size_t>(k.weight()));
    for (int p : k.parts()) {
        s += 'y';
        s.append(static_cast<std::size_t>(p - 1), 'x');
    }
    return Word(std::move(s));
}

Index index_of_word(const Word& w) {
    if (w.empty()) return Index();
    const std::string& s = w.letters();
    if (s.front() != 'y') throw std::invalid_argument("index_of_word: word must start with y");
    std::vector<int> parts;
    for (char c : s) {
        if (c == 'y')
            parts.push_back(1);
        else
            parts.back() += 1;
    }
    return Index(std::move(parts));
}

Word swap_letters(const Word& w) {
    std::string s = w.letters();
    for (char& c : s) c = (c == 'x') ? 'y' : 'x';
    return Word(std::move(s));
}

Word reverse_word(const Word& w) {
    std::string s = w.letters();
    std::reverse(s.begin(), s.end());
    return Word(std::move(s));
}

Word tau(const Word& w) { return swap_letters(reverse_word(w)); }

Word holder_rho(const Word& w) { return tau(w); }

WordSum tau(const WordSum& v) {
    WordSum out;
    for (const auto& [w, c] : v) out.add(tau(w), c);
    return out;
}

WordSum reverse_T(const WordSum& v) {
    WordSum out;
    for (const auto& [w, c] : v) out.add(reverse_word(w), c);
    return out;
}

WordSum sigma_m(int m, const Word& w) {
    if (m < 0) throw std::invalid_argument("sigma_m: m must be >= 0");
    WordSum out;
    std::vector<int> ypos;
    const std::string& s = w.letters();
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == 'y') ypos.push_back(static_cast<int>(i));
    if (ypos.empty()) {
        if (m == 0) out.add(w, 1);
        return out;  // sigma fixes x, so pure-x words have no higher pieces
    }
    for (const auto& e : weak_compositions(m, static_cast<int>(ypos.size()))) {
        std::string t;
        t.reserve(s.size() + static_cast<std::size_t>(m));
        int yi = 0;
        for (char c : s) {
            t += c;
            if (c == 'y') t.append(static_cast<std::size_t>(e[yi++]), 'x');
        }
        out.add(Word(std::move(t)), 1);
    }
    return out;
}

WordSum sigma_m(int m, const WordSum& v) {
    WordSum out;
    for (const auto& [w, c] : v) {
        WordSum piece = sigma_m(m, w);
        piece *= c;
        out += piece;
    }
    return out;
}

bool is_duplex_word(const Word& w) {
    const std::string& s = w.letters();
    if (s.size() < 2 || s.size() % 2 != 0) return false;
    if (s.front() != 'y' || s.back() != 'x') return false;
    for (std::size_t i = 1; i + 1 < s.size(); i += 2) {
        // Interior blocks of two letters must each contain one x and one y.
        if (s[i] == s[i + 1]) return false;
    }
    return true;
}

std::vector<Word> enumerate_duplex_words(int len) {
    std::vector<Word> out;
    if (len < 2 || len % 2 != 0) return out;
    int blocks = (len - 2) / 2;
    for (int mask = 0; mask < (1 << blocks); ++mask) {
        std::string s = "y";
        for (int b = 0; b < blocks; ++b) s += (mask >> b & 1) ? "yx" : "xy";
        s += 'x';
        out.emplace_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

WordSum left_y(const WordSum& v) {
    WordSum out;
    for (const auto& [w, c] : v) out.add(Word("y" + w.letters()), c);
    return out;
}

WordSum right_x(const WordSum& v) {
    WordSum out;
    for (const auto& [w, c] : v) out.add(Word(w.letters() + "x"), c);
    return out;
}

WordSum s_conj(char u, const WordSum& v) {
    if (u != 'x' && u != 'y') throw std::invalid_argument("s_conj: letter must be 'x' or 'y'");
    WordSum out;
    for (const auto& [w, c] : v) {
        if (w.empty() || w.letters().back() != u)
            throw std::invalid_argument("s_conj: term does not end with the given letter");
        std::string s = w.letters();
        s.pop_back();
        out.add(Word(u + s), c);
    }
    return out;
}

bool sigma_compose_check(int m1, int m2, const Word& w) {
    if (!is_duplex_word(w))
        throw std::invalid_argument("sigma_compose_check: word not of the form y{xy,yx}*x");
    WordSum lhs = sigma_m(m1, tau(sigma_m(m2, tau(WordSum(w)))));
    WordSum rhs = tau(sigma_m(m2, tau(sigma_m(m1, WordSum(w)))));
    return lhs == rhs;
}

}  // namespace mzvlab
