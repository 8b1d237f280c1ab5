#include "mzvlab/bigfixed.hpp"

#include <stdexcept>

namespace mzvlab {

BigFixed BigFixed::from_int(long v, int scale) {
    return BigFixed(BigInt(v) * pow10(static_cast<unsigned long>(scale)), scale);
}

BigFixed BigFixed::from_rational(const Rational& q, int scale) {
    BigInt num = q.get_num() * pow10(static_cast<unsigned long>(scale));
    BigInt mant;
    mpz_tdiv_q(mant.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    return BigFixed(std::move(mant), scale);
}

BigFixed BigFixed::rescaled(int new_scale) const {
    if (new_scale == scale_) return *this;
    if (new_scale > scale_)
        return BigFixed(mant_ * pow10(static_cast<unsigned long>(new_scale - scale_)), new_scale);
    BigInt q;
    BigInt div = pow10(static_cast<unsigned long>(scale_ - new_scale));
    mpz_tdiv_q(q.get_mpz_t(), mant_.get_mpz_t(), div.get_mpz_t());
    return BigFixed(std::move(q), new_scale);
}

BigFixed BigFixed::rounded(int digits) const {
    if (digits >= scale_) return rescaled(digits);
    BigInt div = pow10(static_cast<unsigned long>(scale_ - digits));
    BigInt twice = 2 * mant_;
    if (sgn(mant_) >= 0) twice += div;
    else twice -= div;
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), twice.get_mpz_t(), BigInt(2 * div).get_mpz_t());
    return BigFixed(std::move(q), digits);
}

BigFixed& BigFixed::operator+=(const BigFixed& o) {
    if (scale_ != o.scale_) throw std::invalid_argument("BigFixed: scale mismatch in addition");
    mant_ += o.mant_;
    return *this;
}

BigFixed& BigFixed::operator-=(const BigFixed& o) {
    if (scale_ != o.scale_) throw std::invalid_argument("BigFixed: scale mismatch in subtraction");
    mant_ -= o.mant_;
    return *this;
}

BigFixed mul(const BigFixed& a, const BigFixed& b) {
    if (a.scale_ != b.scale_) throw std::invalid_argument("BigFixed: scale mismatch in multiplication");
    BigInt prod = a.mant_ * b.mant_;
    BigInt q;
    BigInt div = pow10(static_cast<unsigned long>(a.scale_));
    mpz_tdiv_q(q.get_mpz_t(), prod.get_mpz_t(), div.get_mpz_t());
    return BigFixed(std::move(q), a.scale_);
}

BigFixed BigFixed::div_int(unsigned long v) const {
    if (v == 0) throw std::invalid_argument("BigFixed: division by zero");
    BigInt q;
    mpz_tdiv_q_ui(q.get_mpz_t(), mant_.get_mpz_t(), v);
    return BigFixed(std::move(q), scale_);
}

BigFixed BigFixed::mul_rational(const Rational& q) const {
    BigInt num = mant_ * q.get_num();
    BigInt r;
    mpz_tdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    return BigFixed(std::move(r), scale_);
}

bool BigFixed::abs_less_pow10(int exp) const {
    // |mant| * 10^-scale < 10^exp  <=>  |mant| < 10^(scale+exp)
    long e = static_cast<long>(scale_) + exp;
    if (e < 0) return sgn(mant_) == 0;  // threshold below 1 ulp: only exact zero passes
    BigInt lim = pow10(static_cast<unsigned long>(e));
    BigInt a = ::abs(mant_);
    return a < lim;
}

int BigFixed::compare(const BigFixed& o) const {
    if (scale_ != o.scale_) throw std::invalid_argument("BigFixed: scale mismatch in comparison");
    return cmp(mant_, o.mant_);
}

std::string BigFixed::str() const {
    BigInt a = ::abs(mant_);
    std::string digits = a.get_str();
    std::string out;
    if (sgn(mant_) < 0) out += '-';
    if (static_cast<int>(digits.size()) <= scale_) {
        out += "0.";
        out.append(static_cast<std::size_t>(scale_) - digits.size(), '0');
        out += digits;
    } else {
        std::size_t cut = digits.size() - static_cast<std::size_t>(scale_);
        out += digits.substr(0, cut);
        if (scale_ > 0) {
            out += '.';
            out += digits.substr(cut);
        }
    }
    return out;
}

BigFixed BigFixed::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("BigFixed::parse: empty");
    bool neg = false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        pos = 1;
    }
    std::string digits;
    int scale = 0;
    bool seen_dot = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("BigFixed::parse: two dots");
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits += c;
            if (seen_dot) ++scale;
        } else {
            throw std::invalid_argument("BigFixed::parse: bad character");
        }
    }
    if (digits.empty()) throw std::invalid_argument("BigFixed::parse: no digits");
    BigInt mant(digits, 10);
    if (neg) mant = -mant;
    return BigFixed(std::move(mant), scale);
}

}  // namespace mzvlab
