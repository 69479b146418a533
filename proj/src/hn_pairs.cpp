#include "cuspcal/hn_pairs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace cuspcal {

namespace {

std::string pair_str(const CharPair& p) {
    return "(" + std::to_string(p.c) + "," + std::to_string(p.p) + ")";
}

} // namespace

bool is_smooth_germ(const CharPairSeq& s) {
    return s.pairs.size() == 1 && s.pairs[0] == CharPair{1, 0};
}

void validate(const CharPairSeq& s) {
    if (s.pairs.empty())
        throw PairSequenceError("empty characteristic pair sequence");
    if (is_smooth_germ(s))
        return;
    long long expected_c = -1;
    for (std::size_t i = 0; i < s.pairs.size(); ++i) {
        const CharPair& pr = s.pairs[i];
        if (pr.p < 1 || pr.c < pr.p)
            throw PairSequenceError("pair " + pair_str(pr) + " violates c >= p >= 1");
        if (expected_c >= 0 && pr.c != expected_c)
            throw PairSequenceError("pair " + pair_str(pr) + ": c must equal the previous gcd " +
                                    std::to_string(expected_c));
        expected_c = std::gcd(pr.c, pr.p);
    }
    if (expected_c != 1)
        throw PairSequenceError("sequence ends with gcd " + std::to_string(expected_c) +
                                ", expected 1");
}

std::vector<long long> mult_sequence(const CharPair& pair) {
    if (pair == CharPair{1, 0})
        return {};
    if (pair.p < 1 || pair.c < pair.p)
        throw PairSequenceError("pair " + pair_str(pair) + " violates c >= p >= 1");
    std::vector<long long> out;
    long long a = pair.c, b = pair.p;
    while (b > 0) {
        long long q = a / b, r = a % b;
        if (q > 1000000 - static_cast<long long>(out.size()))
            throw DomainError("multiplicity sequence of " + pair_str(pair) +
                              " exceeds 10^6 entries");
        for (long long i = 0; i < q; ++i)
            out.push_back(b);
        a = b;
        b = r;
    }
    return out;
}

MultiplicityProfile multiplicity_profile(const CharPairSeq& s) {
    validate(s);
    MultiplicityProfile profile;
    if (is_smooth_germ(s))
        return profile;
    for (const CharPair& pr : s.pairs)
        profile.blocks.push_back(mult_sequence(pr));
    return profile;
}

namespace {

// One curve through the germ's current point: a graph component, or an
// off-graph curve (the initial maximally tangent germ and the transversal
// coordinate germs), with its local intersection number against the germ.
struct Wall {
    int comp = -1; // < 0: off-graph
    BigInt meet;

    bool on_graph() const { return comp >= 0; }
};

struct GermSimulation {
    DualGraph graph;
    int last = -1;
    std::map<int, BigInt> coeff; // multiplicity in the pullback of the point
    BigInt delta_k = 0;          // sum of germ multiplicities at the centers
    BigInt delta_self = 0;       // sum of their squares
    std::vector<std::vector<BigInt>> blocks;
};

GermSimulation simulate_germ(const CharPairSeq& s, const BigInt& tangency) {
    validate(s);
    if (tangency < 1)
        throw DomainError("tangency must be >= 1");
    GermSimulation sim;
    if (is_smooth_germ(s))
        return sim;

    for (std::size_t i = 0; i < s.pairs.size(); ++i) {
        const CharPair& pr = s.pairs[i];
        Wall a, b;
        if (i == 0) {
            a = Wall{-1, tangency * pr.c};
            b = Wall{-1, tangency * pr.p};
        } else {
            // The germ sits at a free point of the newest exceptional curve,
            // meeting it with tangency * c_i; the gcd chain guarantees this.
            a = Wall{sim.last, tangency * pr.c};
            b = Wall{-1, tangency * pr.p};
        }
        sim.blocks.emplace_back();
        while (true) {
            BigInt m = a.meet < b.meet ? a.meet : b.meet;
            sim.blocks.back().push_back(m);
            sim.delta_k += m;
            sim.delta_self += m * m;

            if (sim.graph.order() >= 100000)
                throw DomainError("resolution needs more than 10^5 blowups");
            int e = sim.graph.next_id();
            BigInt c = 0;
            for (const Wall* w : {&a, &b})
                if (w->on_graph()) {
                    sim.graph.component(w->comp).self_int -= 1;
                    c += sim.coeff.at(w->comp);
                }
            if (a.on_graph() && b.on_graph())
                sim.graph.remove_edge_mult(a.comp, b.comp, 1);
            sim.graph.add_component_with_id(e, -1);
            for (const Wall* w : {&a, &b})
                if (w->on_graph())
                    sim.graph.add_edge(w->comp, e, 1);
            sim.coeff[e] = c == 0 ? BigInt(1) : c;
            sim.last = e;

            a.meet -= m;
            b.meet -= m;
            if (a.meet == 0 && b.meet == 0)
                break; // free point of e: this pair is resolved
            Wall rem = a.meet > 0 ? a : b;
            a = rem;
            b = Wall{e, m};
        }
    }
    return sim;
}

} // namespace

MarkedResolution build_resolution_graph(const CharPairSeq& s) {
    validate(s);
    if (is_smooth_germ(s))
        throw PairSequenceError("smooth germ has no exceptional divisor");
    GermSimulation sim = simulate_germ(s, 1);
    return MarkedResolution{std::move(sim.graph), sim.last, sim.coeff.at(sim.last)};
}

std::pair<BigInt, BigInt> lemma22_deltas(const CharPairSeq& s, long long q_dot_gamma) {
    validate(s);
    if (q_dot_gamma < 1)
        throw DomainError("q_dot_gamma must be >= 1");
    BigInt t = q_dot_gamma;
    BigInt m_part = s.pairs[0].c - 1;
    BigInt i_part = 0;
    for (const CharPair& pr : s.pairs) {
        m_part += pr.p;
        i_part += BigInt(pr.c) * pr.p;
    }
    return {t * m_part, t * t * i_part};
}

std::pair<BigInt, BigInt> germ_blowup_deltas(const CharPairSeq& s, long long tangency) {
    GermSimulation sim = simulate_germ(s, tangency);
    return {sim.delta_k, sim.delta_self};
}

namespace {

int unique_minus_one(const DualGraph& g) {
    int found = -1;
    for (const Component& c : g.components()) {
        if (c.self_int == -1 && c.genus_defect == 0) {
            if (found >= 0)
                throw TowerError("multiple (-1)-curves");
            found = c.id;
        }
    }
    if (found < 0)
        throw TowerError("no (-1)-curve");
    return found;
}

} // namespace

std::vector<TowerStep> reconstruct_tower(const DualGraph& g) {
    std::vector<TowerStep> rev;
    DualGraph cur = g;
    while (!cur.empty()) {
        int u = unique_minus_one(cur);
        auto nbrs = cur.neighbors(u);
        if (nbrs.size() > 2)
            throw TowerError("(-1)-curve meets more than two components");
        TowerStep step;
        step.comp = u;
        for (auto [other, mult] : nbrs) {
            if (mult != 1)
                throw TowerError("(-1)-curve meets a component with multiplicity > 1");
            step.parents.push_back(other);
        }
        if (step.parents.size() == 2 && cur.edge_mult(step.parents[0], step.parents[1]) > 0)
            throw TowerError("contraction would create a tangency");
        rev.push_back(step);
        cur = blowdown(cur, u);
    }
    std::reverse(rev.begin(), rev.end());
    if (!rev.empty() && !rev.front().parents.empty())
        throw TowerError("first blowup has a center on the divisor");
    return rev;
}

namespace {

// Inner-block lengths of a tower whose last blowup is inner.
std::vector<int> inner_block_lengths(const std::vector<TowerStep>& steps) {
    std::vector<int> r;
    bool in_inner = false;
    for (const TowerStep& s : steps) {
        if (s.inner()) {
            if (!in_inner) {
                r.push_back(0);
                in_inner = true;
            }
            ++r.back();
        } else {
            in_inner = false;
        }
    }
    return r;
}

} // namespace

ChainType graph_type(const MarkedResolution& m) {
    if (m.graph.empty())
        return ChainType{};
    DualGraph cur = m.graph;
    int u = unique_minus_one(cur);
    if (u != m.minus_one)
        throw TowerError("marked component is not the unique (-1)-curve");
    // A (-1)-tip is removed by the minimal contraction first.
    while (!cur.empty()) {
        u = unique_minus_one(cur);
        if (cur.neighbors(u).size() > 1)
            break;
        cur = blowdown(cur, u);
    }
    if (cur.empty())
        return ChainType{}; // the [(2)_s,1] family
    std::vector<TowerStep> steps = reconstruct_tower(cur);
    return ChainType{inner_block_lengths(steps)};
}

namespace {

BigInt replay_mu(const std::vector<TowerStep>& steps) {
    std::map<int, BigInt> coeff;
    for (const TowerStep& s : steps) {
        BigInt c = 0;
        for (int p : s.parents)
            c += coeff.at(p);
        coeff[s.comp] = c == 0 ? BigInt(1) : c;
    }
    return coeff.at(steps.back().comp);
}

} // namespace

MarkedResolution mark_chain(const Chain& chain) {
    DualGraph g = DualGraph::from_chain(chain);
    if (g.empty())
        throw TowerError("empty chain");
    std::vector<TowerStep> steps = reconstruct_tower(g);
    return MarkedResolution{std::move(g), steps.back().comp, replay_mu(steps)};
}

std::vector<int> first_branch(const MarkedResolution& m) {
    int u = unique_minus_one(m.graph);
    if (u != m.minus_one)
        throw TowerError("marked component is not the unique (-1)-curve");
    if (m.graph.neighbors(u).size() < 2)
        throw DomainError("first branch undefined: the (-1)-curve is a tip");
    std::vector<TowerStep> steps = reconstruct_tower(m.graph);
    std::vector<int> ids;
    bool seen_inner = false;
    for (const TowerStep& s : steps) {
        if (s.inner())
            seen_inner = true;
        else if (seen_inner)
            break; // second outer block starts
        ids.push_back(s.comp);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

namespace {

std::vector<int> seed_chain(int k) {
    std::vector<int> w(static_cast<std::size_t>(k), 2);
    w.push_back(1);
    return w;
}

std::size_t minus_one_index(const std::vector<int>& w) {
    std::size_t j = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 1) {
            if (j != w.size())
                throw TowerError("chain has multiple (-1)-curves");
            j = i;
        }
    }
    if (j == w.size())
        throw TowerError("chain has no (-1)-curve");
    return j;
}

// The two inner blowups keeping a unique (-1)-curve: one at each edge of it.
std::vector<std::vector<int>> inner_children(const std::vector<int>& w) {
    std::size_t j = minus_one_index(w);
    std::vector<std::vector<int>> out;
    if (j > 0) {
        std::vector<int> left = w;
        left[j - 1] += 1;
        left[j] = 2;
        left.insert(left.begin() + static_cast<std::ptrdiff_t>(j), 1);
        out.push_back(std::move(left));
    }
    if (j + 1 < w.size()) {
        std::vector<int> right = w;
        right[j + 1] += 1;
        right[j] = 2;
        right.insert(right.begin() + static_cast<std::ptrdiff_t>(j) + 1, 1);
        out.push_back(std::move(right));
    }
    return out;
}

} // namespace

std::vector<Chain> enumerate_chains(int r, int k_max, int r_cap) {
    if (r < 0 || k_max < 0)
        throw DomainError("enumerate_chains: r and k_max must be >= 0");
    if (r > r_cap)
        throw DomainError("enumerate_chains: r exceeds the cap " + std::to_string(r_cap));
    std::set<std::vector<int>> out;
    for (int k = 0; k <= k_max; ++k) {
        if (r == 0) {
            out.insert(seed_chain(k));
            continue;
        }
        // One leading 2 of the seed is consumed by the first inner blowup.
        std::set<std::vector<int>> level{inner_children(seed_chain(k + 1)).front()};
        for (int step = 2; step <= r; ++step) {
            std::set<std::vector<int>> next;
            for (const std::vector<int>& w : level)
                for (std::vector<int>& child : inner_children(w))
                    next.insert(std::move(child));
            level = std::move(next);
        }
        out.insert(level.begin(), level.end());
    }
    std::vector<Chain> chains;
    for (const std::vector<int>& w : out)
        chains.push_back(Chain{w});
    return chains;
}

bool fibonacci_bound_holds(const MarkedResolution& m) {
    long long kq = k_dot(m.graph);
    if (kq < -1)
        throw DomainError("fibonacci_bound_holds: K.Q = " + std::to_string(kq) +
                          " is below -1, Fibonacci index out of range");
    return m.mu <= fibonacci(kq + 3);
}

CharPairSeq char_pairs_of(const Chain& chain) {
    DualGraph g = DualGraph::from_chain(chain);
    int trailing = 0;
    while (!g.empty()) {
        int u = unique_minus_one(g);
        if (g.neighbors(u).size() > 1)
            break;
        g = blowdown(g, u);
        ++trailing;
    }
    CharPairSeq seq;
    if (!g.empty()) {
        int u = unique_minus_one(g);
        auto nbrs = g.neighbors(u);
        // Split at the (-1)-curve and read the two arm discriminants.
        std::vector<int> arms[2];
        for (int side = 0; side < 2; ++side) {
            int prev = u, cur = nbrs[static_cast<std::size_t>(side)].first;
            while (true) {
                arms[side].push_back(cur);
                int next = -1;
                for (auto [other, mult] : g.neighbors(cur)) {
                    (void)mult;
                    if (other != prev) {
                        next = other;
                        break;
                    }
                }
                if (next < 0)
                    break;
                prev = cur;
                cur = next;
            }
        }
        BigInt d0 = discriminant(DualGraph::from_chain(chain_of(g, arms[0])));
        BigInt d1 = discriminant(DualGraph::from_chain(chain_of(g, arms[1])));
        if (d0 < d1)
            std::swap(d0, d1);
        long long c = d0.convert_to<long long>();
        long long p = d1.convert_to<long long>();
        if (std::gcd(c, p) != 1)
            throw TowerError("chain arms have non-coprime discriminants");
        seq.pairs.push_back(CharPair{c, p});
    }
    for (int i = 0; i < trailing; ++i)
        seq.pairs.push_back(CharPair{1, 1});
    if (seq.pairs.empty())
        throw TowerError("empty chain has no characteristic pairs");
    validate(seq);
    return seq;
}

} // namespace cuspcal
