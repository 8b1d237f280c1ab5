#pragma once

#include <gmpxx.h>
#include <string>

namespace mzvlab {

// Exact rational coefficients. GMP keeps mpq_class canonical, so equality
// and zero tests are structural.
using Rational = mpq_class;
using BigInt = mpz_class;

inline std::string rational_str(const Rational& q) { return q.get_str(); }

// mpq_class(a, b) does not canonicalize; this does.
inline Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline BigInt pow10(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace mzvlab
