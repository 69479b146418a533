#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <numeric>
#include <random>

#include "cuspcal/search.hpp"

using namespace cuspcal;

namespace {

using Sols = std::vector<DiophantineSolution>;

// Naive double-loop brute force inside the box d <= 200, k_i <= 600.
Sols brute_force_box(const DiophantineSystem& sys) {
    Sols out;
    const std::size_t n = sys.lin_b.size();
    std::vector<BigInt> k(n);
    for (BigInt d = sys.d_min; d <= 200; ++d) {
        std::function<void(std::size_t, BigInt)> rec = [&](std::size_t idx, BigInt lin_left) {
            if (idx + 1 == n || n == 0) {
                if (n > 0) {
                    if (sys.lin_b[idx] == 0 || lin_left % sys.lin_b[idx] != 0)
                        return;
                    k[idx] = lin_left / sys.lin_b[idx];
                    if (k[idx] > 600)
                        return;
                } else if (lin_left != 0) {
                    return;
                }
                BigInt quad = sys.quad_a0;
                for (std::size_t i = 0; i < n; ++i)
                    quad += sys.quad_b[i] * k[i];
                if (quad != d * d)
                    return;
                for (const auto& extra : sys.extras) {
                    BigInt v = 0;
                    for (std::size_t i = 0; i < n; ++i)
                        v += extra.coeffs[i] * k[i];
                    if (v < extra.min_value)
                        return;
                }
                out.push_back({d, k});
                return;
            }
            for (BigInt v = 0; v <= 600 && v * sys.lin_b[idx] <= lin_left; ++v) {
                k[idx] = v;
                rec(idx + 1, lin_left - v * sys.lin_b[idx]);
            }
        };
        BigInt rhs = 3 * d - sys.lin_a0;
        if (rhs >= 0)
            rec(0, rhs);
    }
    return out;
}

Sols in_box(Sols sols) {
    Sols out;
    for (auto& s : sols) {
        bool ok = s.d <= 200;
        for (const BigInt& kv : s.k)
            ok = ok && kv <= 600;
        if (ok)
            out.push_back(std::move(s));
    }
    return out;
}

DiophantineSystem make_sys(long long la, std::vector<BigInt> lb, long long qa,
                           std::vector<BigInt> qb) {
    DiophantineSystem sys;
    sys.lin_a0 = la;
    sys.lin_b = std::move(lb);
    sys.quad_a0 = qa;
    sys.quad_b = std::move(qb);
    return sys;
}

DiophantineSystem sys2(long long la, long long lb1, long long lb2, long long qa, long long qb1,
                       long long qb2) {
    return make_sys(la, {lb1, lb2}, qa, {qb1, qb2});
}

} // namespace

TEST_CASE("the three systems with stated solutions") {
    CHECK(solve_linear_quadratic(sys2(23, 3, 1, 105, 15, 3)) == Sols{{12, {0, 13}}});
    CHECK(solve_linear_quadratic(sys2(16, 5, 1, 50, 35, 3)) == Sols{{11, {1, 12}}});
    CHECK(solve_linear_quadratic(sys2(17, 5, 2, 57, 35, 8)) ==
          Sols{{11, {0, 8}}, {16, {5, 3}}});
}

TEST_CASE("the declared-empty systems") {
    CHECK(assert_empty(sys2(18, 5, 1, 62, 35, 3)));
    CHECK(assert_empty(sys2(18, 5, 2, 60, 35, 8)));
    CHECK_FALSE(assert_empty(sys2(23, 3, 1, 105, 15, 3)));
}

TEST_CASE("solutions never exceed the derived bound") {
    for (const DiophantineSystem& sys :
         {sys2(23, 3, 1, 105, 15, 3), sys2(16, 5, 1, 50, 35, 3), sys2(17, 5, 2, 57, 35, 8)}) {
        BigInt dmax = derive_d_max(sys);
        for (const auto& s : solve_linear_quadratic(sys))
            CHECK(s.d <= dmax);
    }
}

TEST_CASE("rejection of unbounded and malformed systems") {
    DiophantineSystem missing = make_sys(10, {0, 1}, 5, {1, 1});
    CHECK_THROWS_AS(solve_linear_quadratic(missing), UnboundedSystemError);
    DiophantineSystem negative = make_sys(10, {-1}, 5, {1});
    CHECK_THROWS_AS(solve_linear_quadratic(negative), DomainError);
    DiophantineSystem mismatch = make_sys(10, {1, 1}, 5, {1});
    CHECK_THROWS_AS(solve_linear_quadratic(mismatch), DimensionMismatchError);
}

TEST_CASE("extra lower-bound constraints filter solutions") {
    DiophantineSystem sys = sys2(23, 3, 1, 105, 15, 3);
    DiophantineSystem::ExtraConstraint extra;
    extra.coeffs = {1, 1};
    extra.min_value = 13;
    sys.extras.push_back(extra);
    CHECK(solve_linear_quadratic(sys) == Sols{{12, {0, 13}}});
    sys.extras.back().min_value = 14;
    CHECK(solve_linear_quadratic(sys).empty());
}

TEST_CASE("solver agrees with naive brute force") {
    std::vector<DiophantineSystem> cases{
        sys2(23, 3, 1, 105, 15, 3), sys2(16, 5, 1, 50, 35, 3), sys2(17, 5, 2, 57, 35, 8),
        sys2(18, 5, 1, 62, 35, 3),  sys2(18, 5, 2, 60, 35, 8),
        make_sys(11, {3}, 21, {15}), make_sys(14, {4}, 36, {24}),
        make_sys(15, {4}, 41, {24}), make_sys(13, {3}, 29, {15})};
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> a0(0, 40), b(1, 8), qb(0, 40), nvars(1, 2);
    for (int trial = 0; trial < 50; ++trial) {
        DiophantineSystem s;
        int n = nvars(rng);
        s.lin_a0 = a0(rng);
        s.quad_a0 = a0(rng);
        for (int i = 0; i < n; ++i) {
            s.lin_b.push_back(b(rng));
            s.quad_b.push_back(qb(rng));
        }
        cases.push_back(std::move(s));
    }
    for (const DiophantineSystem& s : cases)
        CHECK(in_box(solve_linear_quadratic(s)) == brute_force_box(s));
}

TEST_CASE("final search pinned slices") {
    FinalSearchResult r = final_search();
    REQUIRE(!r.solutions.empty());

    auto find = [&](long long gamma, long long p) -> const FinalSearchEntry* {
        for (const auto& e : r.solutions)
            if (e.gamma == gamma && e.p == p)
                return &e;
        return nullptr;
    };
    const FinalSearchEntry* a = find(6, 2);
    REQUIRE(a != nullptr);
    CHECK(a->d == 6);
    CHECK(a->c == 21);
    CHECK(a->r == 1);
    CHECK(a->lhs == Rational(19, 21) + Rational(1, 2) + Rational(1, 6));
    CHECK_FALSE(a->passes_gamma_final);

    const FinalSearchEntry* b = find(13, 2);
    REQUIRE(b != nullptr);
    CHECK(b->d == 7);
    CHECK(b->c == 31);
    CHECK_FALSE(b->passes_gamma_final);

    for (const auto& e : r.solutions)
        CHECK_FALSE(e.passes_gamma_final);
}

TEST_CASE("final search is deterministic and order-canonical") {
    FinalSearchResult a = final_search();
    FinalSearchResult b = final_search();
    REQUIRE(a.solutions.size() == b.solutions.size());
    for (std::size_t i = 0; i < a.solutions.size(); ++i) {
        CHECK(a.solutions[i].gamma == b.solutions[i].gamma);
        CHECK(a.solutions[i].p == b.solutions[i].p);
        CHECK(a.solutions[i].d == b.solutions[i].d);
        if (i > 0) {
            auto key = [](const FinalSearchEntry& e) { return std::tuple{e.gamma, e.p, e.d}; };
            CHECK(key(a.solutions[i - 1]) < key(a.solutions[i]));
        }
    }
}

TEST_CASE("final search solutions satisfy the degree equations") {
    for (const FinalSearchEntry& e : final_search().solutions) {
        if (!e.gcd_coprime)
            continue;
        CurveCandidate cand;
        cand.degree = e.d;
        cand.gamma = e.gamma;
        cand.cusps.push_back({CharPairSeq{{{e.c, e.p}}}, 1});
        auto res = degree_equation_residuals(cand);
        CHECK(res[0] == 0);
        CHECK(res[1] == 0);
        CHECK(res[2] == 0);
    }
}

TEST_CASE("elimination suite all green") {
    auto cases = paper_case_suite();
    CHECK(cases.size() >= 17);
    for (const EliminationCase& c : cases) {
        INFO(c.name, ": ", c.computed);
        CHECK(c.pass);
    }
    auto computed_of = [&](const std::string& name) -> std::string {
        for (const EliminationCase& c : cases)
            if (c.name == name)
                return c.computed;
        return "<missing case>";
    };
    CHECK(computed_of("square-gap: type (3,1), second twig [2,3]").find("{134,136}") !=
          std::string::npos);
    CHECK(computed_of("square-gap: type (2,2), second twig [2,2]").find("{150}") !=
          std::string::npos);
    CHECK(computed_of("square-gap: type (2,2), second twig [3]").find("{146}") !=
          std::string::npos);
}
