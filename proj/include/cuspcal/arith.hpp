#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

#include "cuspcal/errors.hpp"

namespace cuspcal {

// Exact signed integers and reduced rationals. cpp_rational keeps the
// denominator positive and the fraction reduced, so equality is structural.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Square matrix of exact integers, row-major. Dimension 0 is allowed.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}

    std::size_t size() const { return n_; }

    BigInt& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool operator==(const IntMatrix& o) const = default;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> a_;
};

/// F_1 = F_2 = 1, F_{n+1} = F_n + F_{n-1}. Rejects n < 1.
BigInt fibonacci(long long n);

/// Exact determinant (Bareiss fraction-free elimination). det of the
/// 0x0 matrix is 1.
BigInt determinant(const IntMatrix& m);

/// Exact solution of m*x = rhs. Throws DimensionMismatchError when the sizes
/// disagree, SingularMatrixError when m is not invertible.
std::vector<Rational> solve_rational(const IntMatrix& m, const std::vector<Rational>& rhs);

} // namespace cuspcal
