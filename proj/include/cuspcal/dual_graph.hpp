#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cuspcal/arith.hpp"

namespace cuspcal {

/// One irreducible curve in the divisor. genus_defect is the arithmetic-genus
/// contribution acquired through non-transversal contractions; snc-built
/// graphs have genus_defect = 0 everywhere.
struct Component {
    int id = 0;
    int self_int = 0;
    int genus_defect = 0;
    std::string label;

    bool operator==(const Component&) const = default;
};

/// Ordered weight list [a_1,...,a_n] standing for a chain of rational curves
/// with self-intersections -a_1,...,-a_n.
struct Chain {
    std::vector<int> weights;

    bool operator==(const Chain&) const = default;
};

/// Weighted dual graph: one node per component, edges weighted by local
/// intersection numbers (mult > 1 encodes tangency). At most one edge record
/// per unordered pair; no loops.
class DualGraph {
public:
    struct Edge {
        int a = 0; // a < b
        int b = 0;
        int mult = 1;

        bool operator==(const Edge&) const = default;
    };

    DualGraph() = default;

    static DualGraph from_chain(const Chain& chain);

    int add_component(int self_int, int genus_defect = 0, std::string label = {});
    void add_component_with_id(int id, int self_int, int genus_defect = 0, std::string label = {});
    /// Adds mult to the edge {a,b}, creating it if absent.
    void add_edge(int a, int b, int mult = 1);

    bool has(int id) const;
    const Component& component(int id) const;
    Component& component(int id);
    void remove_component(int id); // detaches nothing; caller removes edges first
    int edge_mult(int a, int b) const;
    /// Decrements the edge multiplicity, erasing the record at zero.
    void remove_edge_mult(int a, int b, int mult = 1);

    std::size_t order() const { return comps_.size(); }
    bool empty() const { return comps_.empty(); }
    int next_id() const;

    /// Components sorted by id.
    const std::vector<Component>& components() const { return comps_; }
    /// Edges sorted by (a, b) with a < b.
    const std::vector<Edge>& edges() const { return edges_; }
    /// Neighbours of id as (other, mult), sorted by other.
    std::vector<std::pair<int, int>> neighbors(int id) const;

    bool operator==(const DualGraph&) const = default;

private:
    std::size_t index_of(int id) const;

    std::vector<Component> comps_; // sorted by id
    std::vector<Edge> edges_;      // canonical a < b, sorted
};

struct NodeCenter {
    int id;
};
struct EdgeCenter {
    int a;
    int b;
};
using BlowupCenter = std::variant<NodeCenter, EdgeCenter>;

struct BlowupResult {
    DualGraph graph;
    int new_component;
};

/// A maximal twig: component ids ordered tip first.
struct Twig {
    std::vector<int> ids;

    Chain chain(const DualGraph& g) const;
};

/// Symmetric matrix with self-intersections on the diagonal, rows/columns in
/// component-id order.
IntMatrix intersection_matrix(const DualGraph& g);

/// d(D) = det(-Q(D)); the empty graph has discriminant 1.
BigInt discriminant(const DualGraph& g);
BigInt chain_discriminant(const Chain& chain);

/// True iff -Q(g) is positive definite.
bool is_negative_definite(const DualGraph& g);

/// beta_D(T) = T.(D - T): sum of incident edge multiplicities.
int branching_number(const DualGraph& g, int id);

/// Maximal twigs, each ordered tip first. Throws ChainGraphError when some
/// connected component of g is itself a rational chain (the notion
/// degenerates there).
std::vector<Twig> maximal_twigs(const DualGraph& g);

/// K.C summed over the subset, with K.C = -C^2 - 2 + 2 p_a(C).
long long k_dot(const DualGraph& g, const std::vector<int>& subset);
long long k_dot(const DualGraph& g);

/// Outer (node center) or inner (edge center) blowup. The new (-1)-component
/// gets id next_id().
BlowupResult blowup(const DualGraph& g, const BlowupCenter& center);

/// Contraction of a (-1)-component with genus_defect 0. Neighbour surgery:
/// self += mult^2, genus_defect += mult(mult-1)/2, and every former neighbour
/// pair gains mult_a * mult_b.
DualGraph blowdown(const DualGraph& g, int id);

/// True iff repeated contraction of (-1)-curves (kept transversal: unit
/// multiplicities, genus_defect 0 throughout) empties the graph. Greedy,
/// lowest id first.
bool contracts_to_smooth_point(const DualGraph& g);

/// (-1)-components meeting at most two others, each exactly once.
std::vector<int> superfluous_minus_one(const DualGraph& g);

/// Connected component ids containing `id`.
std::vector<int> connected_component(const DualGraph& g, int id);

/// Weights (-self_int) along an id path.
Chain chain_of(const DualGraph& g, const std::vector<int>& ids);

/// If g is a single path with unit edges, its weights read from the
/// lower-id tip; otherwise nullopt.
std::optional<Chain> as_chain(const DualGraph& g);

} // namespace cuspcal
