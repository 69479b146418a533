#include "cuspcal/dual_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cuspcal {

namespace {

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

} // namespace

DualGraph DualGraph::from_chain(const Chain& chain) {
    DualGraph g;
    for (std::size_t i = 0; i < chain.weights.size(); ++i) {
        int w = chain.weights[i];
        if (w < 1)
            throw DomainError("chain weight must be >= 1, got " + std::to_string(w));
        g.add_component(-w);
        if (i > 0)
            g.add_edge(static_cast<int>(i) - 1, static_cast<int>(i), 1);
    }
    return g;
}

int DualGraph::add_component(int self_int, int genus_defect, std::string label) {
    int id = next_id();
    add_component_with_id(id, self_int, genus_defect, std::move(label));
    return id;
}

void DualGraph::add_component_with_id(int id, int self_int, int genus_defect, std::string label) {
    if (has(id))
        throw DomainError("duplicate component id " + std::to_string(id));
    if (genus_defect < 0)
        throw DomainError("genus_defect must be >= 0");
    Component c{id, self_int, genus_defect, std::move(label)};
    auto it = std::lower_bound(comps_.begin(), comps_.end(), id,
                               [](const Component& x, int v) { return x.id < v; });
    comps_.insert(it, std::move(c));
}

void DualGraph::add_edge(int a, int b, int mult) {
    if (a == b)
        throw DomainError("loop edge on component " + std::to_string(a));
    if (mult < 1)
        throw DomainError("edge multiplicity must be >= 1");
    if (!has(a) || !has(b))
        throw UnknownComponentError("edge endpoint not in graph");
    auto [lo, hi] = ordered(a, b);
    for (Edge& e : edges_) {
        if (e.a == lo && e.b == hi) {
            e.mult += mult;
            return;
        }
    }
    Edge e{lo, hi, mult};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e, [](const Edge& x, const Edge& y) {
        return std::pair{x.a, x.b} < std::pair{y.a, y.b};
    });
    edges_.insert(it, e);
}

bool DualGraph::has(int id) const {
    auto it = std::lower_bound(comps_.begin(), comps_.end(), id,
                               [](const Component& x, int v) { return x.id < v; });
    return it != comps_.end() && it->id == id;
}

std::size_t DualGraph::index_of(int id) const {
    auto it = std::lower_bound(comps_.begin(), comps_.end(), id,
                               [](const Component& x, int v) { return x.id < v; });
    if (it == comps_.end() || it->id != id)
        throw UnknownComponentError("no component with id " + std::to_string(id));
    return static_cast<std::size_t>(it - comps_.begin());
}

const Component& DualGraph::component(int id) const { return comps_[index_of(id)]; }
Component& DualGraph::component(int id) { return comps_[index_of(id)]; }

void DualGraph::remove_component(int id) {
    std::size_t i = index_of(id);
    for (const Edge& e : edges_)
        if (e.a == id || e.b == id)
            throw DomainError("removing component " + std::to_string(id) + " with incident edges");
    comps_.erase(comps_.begin() + static_cast<std::ptrdiff_t>(i));
}

int DualGraph::edge_mult(int a, int b) const {
    auto [lo, hi] = ordered(a, b);
    for (const Edge& e : edges_)
        if (e.a == lo && e.b == hi)
            return e.mult;
    return 0;
}

void DualGraph::remove_edge_mult(int a, int b, int mult) {
    auto [lo, hi] = ordered(a, b);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].a == lo && edges_[i].b == hi) {
            if (edges_[i].mult < mult)
                throw DomainError("edge multiplicity underflow");
            edges_[i].mult -= mult;
            if (edges_[i].mult == 0)
                edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(i));
            return;
        }
    }
    throw DomainError("no edge between " + std::to_string(a) + " and " + std::to_string(b));
}

int DualGraph::next_id() const { return comps_.empty() ? 0 : comps_.back().id + 1; }

std::vector<std::pair<int, int>> DualGraph::neighbors(int id) const {
    index_of(id); // existence check
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : edges_) {
        if (e.a == id)
            out.emplace_back(e.b, e.mult);
        else if (e.b == id)
            out.emplace_back(e.a, e.mult);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Chain Twig::chain(const DualGraph& g) const { return chain_of(g, ids); }

IntMatrix intersection_matrix(const DualGraph& g) {
    const auto& comps = g.components();
    const std::size_t n = comps.size();
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i)
        pos[comps[i].id] = i;
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = comps[i].self_int;
    for (const DualGraph::Edge& e : g.edges()) {
        m.at(pos[e.a], pos[e.b]) = e.mult;
        m.at(pos[e.b], pos[e.a]) = e.mult;
    }
    return m;
}

BigInt discriminant(const DualGraph& g) {
    IntMatrix q = intersection_matrix(g);
    const std::size_t n = q.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            q.at(i, j) = -q.at(i, j);
    return determinant(q);
}

BigInt chain_discriminant(const Chain& chain) { return discriminant(DualGraph::from_chain(chain)); }

bool is_negative_definite(const DualGraph& g) {
    IntMatrix q = intersection_matrix(g);
    const std::size_t n = q.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            q.at(i, j) = -q.at(i, j);
    // Sylvester: all leading principal minors of -Q positive.
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix sub(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                sub.at(i, j) = q.at(i, j);
        if (determinant(sub) <= 0)
            return false;
    }
    return true;
}

int branching_number(const DualGraph& g, int id) {
    int beta = 0;
    for (auto [other, mult] : g.neighbors(id))
        beta += mult;
    return beta;
}

std::vector<int> connected_component(const DualGraph& g, int id) {
    std::set<int> seen{id};
    std::vector<int> stack{id};
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (auto [other, mult] : g.neighbors(cur)) {
            (void)mult;
            if (seen.insert(other).second)
                stack.push_back(other);
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {

// A connected piece is a rational chain when it is acyclic with all branching
// numbers <= 2 and unit edge multiplicities (a single vertex counts).
bool piece_is_chain(const DualGraph& g, const std::vector<int>& ids) {
    int edge_count = 0;
    for (const DualGraph::Edge& e : g.edges()) {
        bool ina = std::binary_search(ids.begin(), ids.end(), e.a);
        if (!ina)
            continue;
        if (e.mult != 1)
            return false;
        ++edge_count;
    }
    if (edge_count != static_cast<int>(ids.size()) - 1)
        return false; // a cycle somewhere
    for (int id : ids)
        if (branching_number(g, id) > 2)
            return false;
    return true;
}

} // namespace

std::vector<Twig> maximal_twigs(const DualGraph& g) {
    std::set<int> unvisited;
    for (const Component& c : g.components())
        unvisited.insert(c.id);
    while (!unvisited.empty()) {
        std::vector<int> piece = connected_component(g, *unvisited.begin());
        if (piece_is_chain(g, piece))
            throw ChainGraphError("divisor has a connected component which is a rational chain");
        for (int id : piece)
            unvisited.erase(id);
    }

    std::vector<Twig> out;
    for (const Component& c : g.components()) {
        if (branching_number(g, c.id) > 1)
            continue; // not a tip
        Twig t;
        t.ids.push_back(c.id);
        int prev = -1;
        int cur = c.id;
        while (true) {
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
            if (branching_number(g, next) >= 3)
                break; // the twig ends before a branching component
            t.ids.push_back(next);
            prev = cur;
            cur = next;
        }
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(),
              [](const Twig& x, const Twig& y) { return x.ids.front() < y.ids.front(); });
    return out;
}

long long k_dot(const DualGraph& g, const std::vector<int>& subset) {
    long long total = 0;
    for (int id : subset) {
        const Component& c = g.component(id);
        total += -static_cast<long long>(c.self_int) - 2 + 2LL * c.genus_defect;
    }
    return total;
}

long long k_dot(const DualGraph& g) {
    std::vector<int> all;
    for (const Component& c : g.components())
        all.push_back(c.id);
    return k_dot(g, all);
}

BlowupResult blowup(const DualGraph& g, const BlowupCenter& center) {
    DualGraph out = g;
    int fresh = out.next_id();
    if (const auto* node = std::get_if<NodeCenter>(&center)) {
        out.component(node->id).self_int -= 1;
        out.add_component_with_id(fresh, -1);
        out.add_edge(node->id, fresh, 1);
    } else {
        const auto& edge = std::get<EdgeCenter>(center);
        if (g.edge_mult(edge.a, edge.b) < 1)
            throw DomainError("inner blowup needs an edge between " + std::to_string(edge.a) +
                              " and " + std::to_string(edge.b));
        out.component(edge.a).self_int -= 1;
        out.component(edge.b).self_int -= 1;
        out.remove_edge_mult(edge.a, edge.b, 1);
        out.add_component_with_id(fresh, -1);
        out.add_edge(edge.a, fresh, 1);
        out.add_edge(edge.b, fresh, 1);
    }
    return {std::move(out), fresh};
}

DualGraph blowdown(const DualGraph& g, int id) {
    const Component& c = g.component(id);
    if (c.self_int != -1)
        throw DomainError("blowdown: component " + std::to_string(id) + " has self-intersection " +
                          std::to_string(c.self_int) + ", expected -1");
    if (c.genus_defect != 0)
        throw DomainError("blowdown: component " + std::to_string(id) + " has positive genus");
    DualGraph out = g;
    auto nbrs = g.neighbors(id);
    for (auto [u, mu] : nbrs)
        out.remove_edge_mult(id, u, mu);
    out.remove_component(id);
    for (auto [u, mu] : nbrs) {
        Component& uc = out.component(u);
        uc.self_int += mu * mu;
        uc.genus_defect += mu * (mu - 1) / 2;
    }
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            out.add_edge(nbrs[i].first, nbrs[j].first, nbrs[i].second * nbrs[j].second);
    return out;
}

namespace {

// A contraction step is admissible when it keeps every image component smooth
// and transversal: the (-1)-curve must have genus 0 and unit multiplicities.
std::vector<int> admissible_contractions(const DualGraph& g) {
    std::vector<int> out;
    for (const Component& c : g.components()) {
        if (c.self_int != -1 || c.genus_defect != 0)
            continue;
        bool ok = true;
        for (auto [other, mult] : g.neighbors(c.id)) {
            (void)other;
            if (mult != 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.push_back(c.id);
    }
    return out;
}

} // namespace

bool contracts_to_smooth_point(const DualGraph& g) {
    DualGraph cur = g;
    while (!cur.empty()) {
        std::vector<int> cand = admissible_contractions(cur);
        if (cand.empty())
            return false;
        cur = blowdown(cur, cand.front()); // lowest id first
    }
    return true;
}

std::vector<int> superfluous_minus_one(const DualGraph& g) {
    std::vector<int> out;
    for (const Component& c : g.components()) {
        if (c.self_int != -1 || c.genus_defect != 0)
            continue;
        auto nbrs = g.neighbors(c.id);
        if (nbrs.size() > 2)
            continue;
        bool unit = true;
        for (auto [other, mult] : nbrs) {
            (void)other;
            if (mult != 1)
                unit = false;
        }
        if (unit)
            out.push_back(c.id);
    }
    return out;
}

Chain chain_of(const DualGraph& g, const std::vector<int>& ids) {
    Chain c;
    for (int id : ids) {
        int w = -g.component(id).self_int;
        c.weights.push_back(w);
    }
    return c;
}

std::optional<Chain> as_chain(const DualGraph& g) {
    if (g.empty())
        return Chain{};
    std::vector<int> piece = connected_component(g, g.components().front().id);
    if (piece.size() != g.order() || !piece_is_chain(g, piece))
        return std::nullopt;
    if (g.order() == 1)
        return chain_of(g, {g.components().front().id});
    int tip = -1;
    for (const Component& c : g.components()) {
        if (branching_number(g, c.id) == 1) {
            tip = c.id;
            break; // lower-id tip
        }
    }
    std::vector<int> path{tip};
    int prev = -1, cur = tip;
    while (true) {
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
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    return chain_of(g, path);
}

} // namespace cuspcal
