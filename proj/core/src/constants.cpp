#include "mzvlab/constants.hpp"

#include <stdexcept>

namespace mzvlab {

namespace {
constexpr int kGuard = 12;
}

BigFixed atan_inv(unsigned long k, int scale) {
    if (k < 2) throw std::invalid_argument("atan_inv: k must be >= 2");
    int s = scale + kGuard;
    BigInt pw = pow10(static_cast<unsigned long>(s));
    mpz_tdiv_q_ui(pw.get_mpz_t(), pw.get_mpz_t(), k);  // 10^s / k
    BigInt sum = pw;
    unsigned long kk = k * k;
    BigInt term;
    for (unsigned long j = 1; sgn(pw) != 0; ++j) {
        mpz_tdiv_q_ui(pw.get_mpz_t(), pw.get_mpz_t(), kk);
        mpz_tdiv_q_ui(term.get_mpz_t(), pw.get_mpz_t(), 2 * j + 1);
        if (j % 2 == 1)
            sum -= term;
        else
            sum += term;
    }
    return BigFixed(sum, s).rescaled(scale);
}

BigFixed pi_fixed(int scale) {
    int s = scale + kGuard;
    BigFixed v = atan_inv(5, s).mul_int(16) - atan_inv(239, s).mul_int(4);
    return v.rescaled(scale);
}

BigFixed pi_fixed_alt(int scale) {
    int s = scale + kGuard;
    BigFixed v = (atan_inv(2, s) + atan_inv(3, s)).mul_int(4);
    return v.rescaled(scale);
}

BigFixed ln2_fixed(int scale) {
    // atanh(1/3) = sum_{j>=0} 1 / ((2j+1) 3^(2j+1))
    int s = scale + kGuard;
    BigInt pw = pow10(static_cast<unsigned long>(s));
    mpz_tdiv_q_ui(pw.get_mpz_t(), pw.get_mpz_t(), 3);
    BigInt sum = pw;
    BigInt term;
    for (unsigned long j = 1; sgn(pw) != 0; ++j) {
        mpz_tdiv_q_ui(pw.get_mpz_t(), pw.get_mpz_t(), 9);
        mpz_tdiv_q_ui(term.get_mpz_t(), pw.get_mpz_t(), 2 * j + 1);
        sum += term;
    }
    return BigFixed(2 * sum, s).rescaled(scale);
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigFixed pow_fixed(const BigFixed& base, unsigned exponent) {
    BigFixed acc = BigFixed::one(base.scale());
    for (unsigned i = 0; i < exponent; ++i) acc = mul(acc, base);
    return acc;
}

}  // namespace mzvlab
