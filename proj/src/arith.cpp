#include "cuspcal/arith.hpp"

#include <utility>

namespace cuspcal {

BigInt fibonacci(long long n) {
    if (n < 1)
        throw DomainError("fibonacci: index must be >= 1, got " + std::to_string(n));
    BigInt a = 1, b = 1; // F_1, F_2
    for (long long i = 3; i <= n; ++i) {
        BigInt c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return n == 1 ? a : b;
}

BigInt determinant(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    IntMatrix w = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && w.at(piv, k) == 0)
                ++piv;
            if (piv == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(w.at(k, j), w.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Bareiss: every division here is exact.
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    BigInt d = w.at(n - 1, n - 1);
    return sign < 0 ? BigInt(-d) : d;
}

std::vector<Rational> solve_rational(const IntMatrix& m, const std::vector<Rational>& rhs) {
    const std::size_t n = m.size();
    if (rhs.size() != n)
        throw DimensionMismatchError("solve_rational: matrix is " + std::to_string(n) + "x" +
                                     std::to_string(n) + " but rhs has " +
                                     std::to_string(rhs.size()) + " entries");
    // Gaussian elimination over the rationals.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rational(m.at(i, j));
        a[i][n] = rhs[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0)
            ++piv;
        if (piv == n)
            throw SingularMatrixError("solve_rational: matrix is singular");
        std::swap(a[k], a[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0)
                continue;
            Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j <= n; ++j)
                a[i][j] -= f * a[k][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = a[i][n] / a[i][i];
    return x;
}

} // namespace cuspcal
