#include "mzvlab/lll.hpp"

#include <stdexcept>

namespace mzvlab {

namespace {

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    BigInt acc(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return acc;
}

// Nearest integer to a rational (ties toward +inf).
BigInt round_nearest(const Rational& q) {
    BigInt num = 2 * q.get_num() + q.get_den();
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), BigInt(2 * q.get_den()).get_mpz_t());
    return r;
}

}  // namespace

void lll_reduce(std::vector<std::vector<BigInt>>& basis, const Rational& delta) {
    const std::size_t n = basis.size();
    if (n <= 1) return;
    const std::size_t dim = basis[0].size();
    for (const auto& row : basis)
        if (row.size() != dim) throw std::invalid_argument("lll_reduce: ragged rows");

    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> B(n, Rational(0));

    auto reduce_pair = [&](std::size_t k, std::size_t l) {
        Rational m = mu[k][l];
        if (2 * abs(m.get_num()) <= m.get_den()) return;  // |mu| <= 1/2
        BigInt q = round_nearest(m);
        for (std::size_t t = 0; t < dim; ++t)
            mpz_submul(basis[k][t].get_mpz_t(), q.get_mpz_t(), basis[l][t].get_mpz_t());
        mu[k][l] -= Rational(q);
        for (std::size_t i = 0; i < l; ++i) mu[k][i] -= Rational(q) * mu[l][i];
    };

    std::size_t kmax = 0;
    B[0] = Rational(dot(basis[0], basis[0]));
    if (is_zero(B[0])) throw std::invalid_argument("lll_reduce: zero row");

    std::size_t k = 1;
    while (k < n) {
        if (k > kmax) {
            kmax = k;
            for (std::size_t j = 0; j <= k; ++j) {
                Rational num(dot(basis[k], basis[j]));
                for (std::size_t i = 0; i < j; ++i) num -= mu[j][i] * mu[k][i] * B[i];
                if (j < k)
                    mu[k][j] = num / B[j];
                else
                    B[k] = num;
            }
            if (is_zero(B[k])) throw std::invalid_argument("lll_reduce: dependent rows");
        }
        for (;;) {
            reduce_pair(k, k - 1);
            if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
                // Swap rows k-1 and k, updating the Gram-Schmidt data in place.
                std::swap(basis[k], basis[k - 1]);
                for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
                Rational m = mu[k][k - 1];
                Rational Bnew = B[k] + m * m * B[k - 1];
                mu[k][k - 1] = m * B[k - 1] / Bnew;
                B[k] = B[k - 1] * B[k] / Bnew;
                B[k - 1] = Bnew;
                for (std::size_t i = k + 1; i <= kmax; ++i) {
                    Rational t = mu[i][k];
                    mu[i][k] = mu[i][k - 1] - m * t;
                    mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
                }
                k = (k > 1) ? k - 1 : 1;
            } else {
                break;
            }
        }
        for (std::size_t l = k - 1; l-- > 0;) reduce_pair(k, l);
        ++k;
    }
}

}  // namespace mzvlab
