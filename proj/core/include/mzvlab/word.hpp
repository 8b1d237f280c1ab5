#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "mzvlab/index.hpp"
#include "mzvlab/lincomb.hpp"

namespace mzvlab {

// A word over the two-letter alphabet {x, y}; the empty word is the monoid
// identity. Stored as a string of 'x'/'y' which is also the text format.
class Word {
public:
    Word() = default;
    explicit Word(std::string letters);
    static Word parse(std::string_view text) { return Word(std::string(text)); }

    const std::string& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    char at(int i) const { return letters_[static_cast<std::size_t>(i)]; }

    Word prefix(int len) const { return Word(letters_.substr(0, static_cast<std::size_t>(len))); }
    Word suffix_from(int pos) const { return Word(letters_.substr(static_cast<std::size_t>(pos))); }
    friend Word operator*(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }

    std::string str() const { return letters_.empty() ? "1" : letters_; }

    friend bool operator==(const Word&, const Word&) = default;
    // Graded order: length, then lexicographic.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
        return a.letters_ <=> b.letters_;
    }

private:
    std::string letters_;
};

using WordSum = LinComb<Word>;

// I(k_1,...,k_r) = y x^{k_1-1} ... y x^{k_r-1}; requires k nonempty.
Word word_of_index(const Index& k);

// Left inverse of word_of_index; requires a nonempty word starting with y.
Index index_of_word(const Word& w);

// Anti-automorphism: reverse the word and swap x <-> y. Involution.
Word tau(const Word& w);
WordSum tau(const WordSum& v);

// Plain word reversal T. Involution; tau = T o swap = swap o T.
Word reverse_word(const Word& w);
WordSum reverse_T(const WordSum& v);

// Letter swap x <-> y without reversal.
Word swap_letters(const Word& w);

// Degree-m graded piece of the substitution y -> y(1 + x + x^2 + ...):
// distributes m extra x letters immediately after the y's in all ways.
// On I-words: sigma_m(I(k)) = sum over |e|=m of I(k+e).
WordSum sigma_m(int m, const Word& w);
WordSum sigma_m(int m, const WordSum& v);

// Whether w = y u x with u a concatenation of the two-letter blocks xy, yx.
// These are the I-words of the alternating-shape index family.
bool is_duplex_word(const Word& w);

// The duplex words of a given even length (y u x with |u| = len-2).
std::vector<Word> enumerate_duplex_words(int len);

WordSum left_y(const WordSum& v);
WordSum right_x(const WordSum& v);

// S_u moves a trailing letter u to the front: S_u(vu) = uv. Requires every
// term to end with u.
WordSum s_conj(char u, const WordSum& v);

// reverse + swap; equal to tau on single words. Kept as its own named map
// because the numeric evaluator is specified in terms of it.
Word holder_rho(const Word& w);

// Both operator orders of the sigma/tau sandwich agree on duplex words;
// exposed as a boolean oracle (a false return indicates an implementation bug).
bool sigma_compose_check(int m1, int m2, const Word& w);

}  // namespace mzvlab
