#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cuspcal/hn_pairs.hpp"

namespace cuspcal {

/// M = c_1 + sum p_i - 1, I = sum c_i p_i, mult = p_1.
struct CuspInvariants {
    BigInt m;
    BigInt i;
    long long mult = 0;
};

/// Plane curve candidate for the degree equations: degree d, gamma = -E^2 on
/// the resolution at hand, and per cusp its pair sequence and rho = Q_j.E.
struct CurveCandidate {
    struct Cusp {
        CharPairSeq pairs;
        long long rho = 1;
    };
    long long degree = 0;
    long long gamma = 0; // may be negative at low degree
    std::vector<Cusp> cusps;
};

/// Bookkeeping state of the minimalization process.
struct BoundProfile {
    long long p2 = 0;
    long long zeta = 0;
    long long gamma0 = 0;
    long long tau_star = 0;
    long long s = 0;
    long long c = 1;
    long long n = 0;
    long long n1 = 0;
};

/// Rational divisor supported on components of a graph.
struct QDivisor {
    std::map<int, Rational> coefficients;

    Rational self_intersection(const DualGraph& g) const;
};

/// ind(T) = d(T - tip)/d(T), tip first; ind of the empty chain is 0.
/// Rejects weights < 2.
Rational inductance(const Chain& t);

/// The bark of a twig (ids tip first): the divisor supported on the twig
/// meeting the tip with -1 and the other twig components with 0. Checks
/// (Bk)^2 = -ind on the way out.
QDivisor bark(const DualGraph& g, const std::vector<int>& twig_ids);

/// Sum of inductances over all maximal rational twigs.
Rational total_inductance(const DualGraph& g);

/// Contribution of the maximal twigs lying in the first branch of the
/// exceptional graph, with the resolved curve attached at the (-1)-curve;
/// true iff it exceeds 1/2.
bool first_branch_contribution_exceeds_half(const MarkedResolution& m);

CuspInvariants cusp_invariants(const CharPairSeq& s);

/// Residuals of the three degree equations; the candidate is consistent iff
/// all are zero:
///   r1 = (gamma - 2 + 3d)  - sum rho_j M_j
///   r2 = (gamma + d^2)     - sum rho_j^2 I_j
///   r3 = (d-1)(d-2)        - sum rho_j (rho_j I_j - M_j)
std::array<BigInt, 3> degree_equation_residuals(const CurveCandidate& cand);

/// (K+D)^2 + ind(D) <= 3 chi(X \ D), exact.
bool bmy_holds(const BigInt& kd_sq, const Rational& ind, const BigInt& chi);

/// K_n.(K_n+D_n) = p2 - c - tau* - n and E_n.(K_n+D_n) = 2c - 2 + tau* + n1.
std::pair<long long, long long> mmp_bookkeeping(const BoundProfile& b);

/// Violated constraints among: gamma0 + tau* <= 2 p2 + 2 zeta, |zeta| <=
/// p2 - 2, gamma0 >= 4. Empty result means feasible.
std::vector<std::string> bound_profile_feasible(const BoundProfile& b);

/// Structural bounds of the classification the profiles live under.
struct Cn1Bounds {
    long long max_process_length = 1;
    long long max_cusps = 2;
    long long p2_min = 3;
    long long p2_max = 4;
};

std::vector<std::string> cn1_violations(const BoundProfile& b, const Cn1Bounds& bounds = {});

/// rho(X) = 10 - K^2 on a rational surface.
long long noether_rho(long long k_sq);

/// #D_i = rho(X_i) + i.
long long component_count_identity(long long rho, long long i);

struct XeProcessInput {
    long long zeta = 0;
    long long gamma0 = 0;
    long long gammat = 0;
    long long theta0 = 0;
    long long theta1 = 0;
    long long big_theta0 = 0;
    long long big_theta1 = 0;
    long long tau_star = 0;
    long long p2 = 0;
    long long c = 1;
};

/// Constraints of the almost-minimalization of (X,E): gamma_t = gamma_0 -
/// theta_1, Theta_0 >= 2 theta_0, Theta_1 >= theta_1,
/// p2 - zeta + (1 - 4/gamma_t) c >= (2/gamma_t)(Theta_1 + tau*) + Theta_0,
/// and zeta + theta_0 >= 2 - 4/gamma_t. Requires gamma_t >= 4. Returns the
/// violated subset.
std::vector<std::string> xe_process_constraints(const XeProcessInput& in);

} // namespace cuspcal
