#pragma once

#include <string>
#include <vector>

#include "cuspcal/invariants.hpp"

namespace cuspcal {

/// Linear + quadratic integer system
///   3d  = lin_a0  + sum lin_b[i]  * k_i
///   d^2 = quad_a0 + sum quad_b[i] * k_i
/// in unknowns k_i >= 0 and d >= d_min, with optional extra lower-bound
/// constraints sum coeffs[i] * k_i >= min_value. All b coefficients must be
/// non-negative; every unknown must appear in the linear relation, otherwise
/// the solution set is unbounded and the system is rejected.
struct DiophantineSystem {
    BigInt lin_a0;
    std::vector<BigInt> lin_b;
    BigInt quad_a0;
    std::vector<BigInt> quad_b;
    long long d_min = 1;

    struct ExtraConstraint {
        std::vector<BigInt> coeffs;
        BigInt min_value;
    };
    std::vector<ExtraConstraint> extras;
};

struct DiophantineSolution {
    BigInt d;
    std::vector<BigInt> k;

    bool operator==(const DiophantineSolution&) const = default;
};

/// Complete solution set, sorted by d then k.
std::vector<DiophantineSolution> solve_linear_quadratic(const DiophantineSystem& sys);

bool assert_empty(const DiophantineSystem& sys);

/// Largest d any solution can have; exposed so the enumeration bound is
/// checkable.
BigInt derive_d_max(const DiophantineSystem& sys);

struct FinalSearchEntry {
    long long gamma = 0;
    long long p = 0;
    long long d = 0;
    long long c = 0;
    long long r = 0; // c mod p
    bool gcd_coprime = false;
    Rational lhs; // (c-p)/c + (p-r)/p + 1/gamma
    bool passes_gamma_final = false;
};

struct FinalSearchResult {
    std::vector<FinalSearchEntry> solutions;
};

struct FinalSearchParams {
    long long gamma_min = 6;
    long long gamma_max = 14;
    long long p_max = 13;
    long long d_min = 6;
};

/// Enumerates d^2 - 3pd = (gamma-p-1)p - gamma over the stated box, sets
/// c = 3d + gamma - p - 1, flags the coprimality filter gcd(c,p) = 1 (with
/// c > p) and evaluates the twig inequality
/// (c-p)/c + (p-r)/p + 1/gamma <= 1 exactly.
FinalSearchResult final_search(const FinalSearchParams& params = {});

struct EliminationCase {
    std::string name;
    std::string statement; // what is being checked
    std::string expected;
    std::string computed;
    bool pass = false;
};

/// Every quoted arithmetic elimination, re-run: consecutive-product gaps,
/// congruence filters, the named linear+quadratic systems, and the final
/// search. All cases must pass.
std::vector<EliminationCase> paper_case_suite();

} // namespace cuspcal
