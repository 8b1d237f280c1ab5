#pragma once

#include <map>
#include <sstream>
#include <string>

#include "mzvlab/rational.hpp"

namespace mzvlab {

// Finite formal sum over an ordered key type with exact rational
// coefficients. Zero coefficients are never stored.
template <class Key>
class LinComb {
public:
    using Terms = std::map<Key, Rational>;

    LinComb() = default;
    explicit LinComb(const Key& k) { terms_.emplace(k, 1); }

    void add(const Key& k, const Rational& c) {
        if (mzvlab::is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (mzvlab::is_zero(it->second)) terms_.erase(it);
        }
    }

    Rational coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& s) {
        if (mzvlab::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }

    friend bool operator==(const LinComb& a, const LinComb& b) {
        return a.terms_ == b.terms_;
    }

    // Text form `±c·(key) ±c·(key) …`; keys format themselves via str().
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) out << ' ';
            out << (sgn(c) < 0 ? "-" : "+");
            Rational a = abs(c);
            out << rational_str(a) << "·(" << k.str() << ")";
            first = false;
        }
        return out.str();
    }

private:
    Terms terms_;
};

}  // namespace mzvlab
