#include "cuspcal/invariants.hpp"

#include <algorithm>
#include <set>

namespace cuspcal {

Rational QDivisor::self_intersection(const DualGraph& g) const {
    Rational total = 0;
    for (const auto& [id, x] : coefficients)
        total += x * x * g.component(id).self_int;
    for (const DualGraph::Edge& e : g.edges()) {
        auto a = coefficients.find(e.a);
        auto b = coefficients.find(e.b);
        if (a != coefficients.end() && b != coefficients.end())
            total += 2 * a->second * b->second * e.mult;
    }
    return total;
}

namespace {

void require_twig_weights(const Chain& t) {
    for (int w : t.weights) {
        if (w == 1)
            throw DomainError("twig contains a (-1)-curve");
        if (w < 2)
            throw DomainError("twig weight must be >= 2, got " + std::to_string(w));
    }
}

} // namespace

Rational inductance(const Chain& t) {
    if (t.weights.empty())
        return 0;
    require_twig_weights(t);
    Chain tail{std::vector<int>(t.weights.begin() + 1, t.weights.end())};
    BigInt num = chain_discriminant(tail);
    BigInt den = chain_discriminant(t);
    if (den == 0)
        throw SingularMatrixError("twig has zero discriminant");
    return Rational(num, den);
}

QDivisor bark(const DualGraph& g, const std::vector<int>& twig_ids) {
    if (twig_ids.empty())
        throw DomainError("bark of an empty twig");
    const std::size_t n = twig_ids.size();
    for (int id : twig_ids)
        g.component(id); // existence check
    if (branching_number(g, twig_ids.front()) > 1)
        throw DomainError("twig does not start at a tip");
    for (std::size_t i = 0; i < n; ++i) {
        if (branching_number(g, twig_ids[i]) > 2)
            throw DomainError("twig contains a branching component");
        if (i + 1 < n && g.edge_mult(twig_ids[i], twig_ids[i + 1]) != 1)
            throw DomainError("twig components must meet consecutively, once");
        for (std::size_t j = i + 2; j < n; ++j)
            if (g.edge_mult(twig_ids[i], twig_ids[j]) != 0)
                throw DomainError("twig is not a chain");
    }
    Chain weights = chain_of(g, twig_ids);
    require_twig_weights(weights);

    IntMatrix q(n);
    for (std::size_t i = 0; i < n; ++i) {
        q.at(i, i) = g.component(twig_ids[i]).self_int;
        if (i + 1 < n) {
            q.at(i, i + 1) = 1;
            q.at(i + 1, i) = 1;
        }
    }
    std::vector<Rational> rhs(n, Rational(0));
    rhs[0] = -1;
    std::vector<Rational> x = solve_rational(q, rhs);

    QDivisor bk;
    for (std::size_t i = 0; i < n; ++i)
        bk.coefficients[twig_ids[i]] = x[i];
    // (Bk)^2 = x.(Q x) = x.rhs = -x_0 must equal -ind(T).
    if (x[0] != inductance(weights))
        throw SingularMatrixError("bark postcondition (Bk)^2 = -ind failed");
    return bk;
}

Rational total_inductance(const DualGraph& g) {
    Rational total = 0;
    for (const Twig& t : maximal_twigs(g))
        total += inductance(t.chain(g));
    return total;
}

bool first_branch_contribution_exceeds_half(const MarkedResolution& m) {
    std::vector<int> branch = first_branch(m);
    std::set<int> branch_set(branch.begin(), branch.end());

    // Attach the resolved curve at the (-1)-curve so branching numbers are
    // the ones of the full boundary divisor.
    DualGraph d = m.graph;
    int e = d.add_component(0, 0, "E");
    d.add_edge(m.minus_one, e, 1);

    Rational total = 0;
    for (const Twig& t : maximal_twigs(d)) {
        bool inside = true;
        for (int id : t.ids)
            if (!branch_set.count(id)) {
                inside = false;
                break;
            }
        if (inside)
            total += inductance(t.chain(d));
    }
    return total > Rational(1, 2);
}

CuspInvariants cusp_invariants(const CharPairSeq& s) {
    validate(s);
    CuspInvariants inv;
    inv.m = BigInt(s.pairs[0].c) - 1;
    inv.i = 0;
    for (const CharPair& pr : s.pairs) {
        inv.m += pr.p;
        inv.i += BigInt(pr.c) * pr.p;
    }
    inv.mult = s.pairs[0].p;
    return inv;
}

std::array<BigInt, 3> degree_equation_residuals(const CurveCandidate& cand) {
    if (cand.cusps.empty())
        throw DomainError("candidate must have at least one cusp");
    if (cand.degree < 1)
        throw DomainError("candidate degree must be >= 1");
    BigInt d = cand.degree;
    BigInt gamma = cand.gamma;
    BigInt sum1 = 0, sum2 = 0, sum3 = 0;
    for (const CurveCandidate::Cusp& cusp : cand.cusps) {
        if (cusp.rho < 1)
            throw DomainError("cusp rho must be >= 1");
        CuspInvariants inv = cusp_invariants(cusp.pairs);
        BigInt rho = cusp.rho;
        sum1 += rho * inv.m;
        sum2 += rho * rho * inv.i;
        sum3 += rho * (rho * inv.i - inv.m);
    }
    return {gamma - 2 + 3 * d - sum1, gamma + d * d - sum2, (d - 1) * (d - 2) - sum3};
}

bool bmy_holds(const BigInt& kd_sq, const Rational& ind, const BigInt& chi) {
    return Rational(kd_sq) + ind <= Rational(3 * chi);
}

namespace {

void validate_profile(const BoundProfile& b) {
    if (b.tau_star < 0 || b.s < 0 || b.n < 0 || b.n1 < 0)
        throw DomainError("profile counters must be >= 0");
    if (b.c < 1)
        throw DomainError("profile needs at least one cusp");
    if (b.n1 > b.n)
        throw DomainError("n1 cannot exceed n");
}

} // namespace

std::pair<long long, long long> mmp_bookkeeping(const BoundProfile& b) {
    validate_profile(b);
    long long kk = b.p2 - b.c - b.tau_star - b.n;
    long long ek = 2 * b.c - 2 + b.tau_star + b.n1;
    return {kk, ek};
}

std::vector<std::string> bound_profile_feasible(const BoundProfile& b) {
    validate_profile(b);
    std::vector<std::string> violated;
    if (b.gamma0 + b.tau_star > 2 * b.p2 + 2 * b.zeta)
        violated.push_back("gamma0-tau-budget");
    long long abs_zeta = b.zeta < 0 ? -b.zeta : b.zeta;
    if (abs_zeta > b.p2 - 2)
        violated.push_back("zeta-range");
    if (b.gamma0 < 4)
        violated.push_back("gamma0-min");
    return violated;
}

std::vector<std::string> cn1_violations(const BoundProfile& b, const Cn1Bounds& bounds) {
    validate_profile(b);
    std::vector<std::string> violated;
    if (b.n > bounds.max_process_length)
        violated.push_back("process-length");
    if (b.c > bounds.max_cusps)
        violated.push_back("cusp-count");
    if (b.p2 < bounds.p2_min || b.p2 > bounds.p2_max)
        violated.push_back("p2-range");
    return violated;
}

long long noether_rho(long long k_sq) { return 10 - k_sq; }

long long component_count_identity(long long rho, long long i) { return rho + i; }

std::vector<std::string> xe_process_constraints(const XeProcessInput& in) {
    if (in.gammat < 4)
        throw DomainError("gamma_t must be >= 4, got " + std::to_string(in.gammat));
    std::vector<std::string> violated;
    if (in.gammat != in.gamma0 - in.theta1)
        violated.push_back("gamma-consistency");
    if (in.big_theta0 < 2 * in.theta0)
        violated.push_back("theta0-pairing");
    if (in.big_theta1 < in.theta1)
        violated.push_back("theta1-pairing");
    Rational gt(in.gammat);
    Rational lhs7 = Rational(in.p2 - in.zeta) + (1 - 4 / gt) * in.c;
    Rational rhs7 = (2 / gt) * (in.big_theta1 + in.tau_star) + in.big_theta0;
    if (lhs7 < rhs7)
        violated.push_back("boundary-nef-intersection");
    Rational zeta_t(in.zeta + in.theta0);
    if (zeta_t < 2 - 4 / gt)
        violated.push_back("positive-part-square");
    return violated;
}

} // namespace cuspcal
