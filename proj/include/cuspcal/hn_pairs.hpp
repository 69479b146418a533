#pragma once

#include <array>
#include <utility>
#include <vector>

#include "cuspcal/dual_graph.hpp"

namespace cuspcal {

struct CharPair {
    long long c = 0;
    long long p = 0;

    bool operator==(const CharPair&) const = default;
};

/// Characteristic (Hamburger-Noether) pair sequence of a cusp. The smooth
/// germ is exactly ((1,0)); otherwise c_i >= p_i >= 1, gcd(c_i,p_i) = c_{i+1}
/// and the final gcd is 1.
struct CharPairSeq {
    std::vector<CharPair> pairs;

    bool operator==(const CharPairSeq&) const = default;
};

/// Per-pair multiplicity blocks, each non-increasing.
struct MultiplicityProfile {
    std::vector<std::vector<long long>> blocks;

    bool operator==(const MultiplicityProfile&) const = default;
};

/// Inner-block lengths (r_1,...,r_m); the empty list is the distinguished
/// value (0) reserved for the zero divisor and the [(2)_s,1] family.
struct ChainType {
    std::vector<int> r;

    bool is_zero() const { return r.empty(); }
    bool operator==(const ChainType&) const = default;
};

/// Exceptional dual graph with its unique (-1)-curve marked and that curve's
/// multiplicity in the total transform of the resolved point.
struct MarkedResolution {
    DualGraph graph;
    int minus_one = -1;
    BigInt mu;
};

/// Throws PairSequenceError unless s is ((1,0)) or a structurally valid
/// gcd-chained sequence ending at gcd 1.
void validate(const CharPairSeq& s);
bool is_smooth_germ(const CharPairSeq& s);

/// Euclidean subtraction chain of one pair: quotient-many copies of each
/// remainder. Sum is c+p-gcd(c,p); sum of squares is c*p. (1,0) gives the
/// empty list.
std::vector<long long> mult_sequence(const CharPair& pair);

MultiplicityProfile multiplicity_profile(const CharPairSeq& s);

/// Runs the blowup sequence of the germ symbolically and returns the
/// exceptional dual graph; rejects the smooth germ.
MarkedResolution build_resolution_graph(const CharPairSeq& s);

/// (Q.Gamma)(c_1 + sum p_i - 1) and (Q.Gamma)^2 * sum c_i p_i: the changes in
/// -K.(image) and self-intersection for a curve meeting the exceptional
/// divisor only in its (-1)-curve.
std::pair<BigInt, BigInt> lemma22_deltas(const CharPairSeq& s, long long q_dot_gamma);

/// Same two deltas obtained by running the blowup simulation on a germ with
/// local intersections scaled by `tangency`; the independent route for
/// checking lemma22_deltas.
std::pair<BigInt, BigInt> germ_blowup_deltas(const CharPairSeq& s, long long tangency);

/// One blowup of the reconstructed tower: the component it created and the
/// components through its center (none for the very first, one for an outer
/// blowup, two for an inner one).
struct TowerStep {
    int comp = -1;
    std::vector<int> parents;

    bool inner() const { return parents.size() == 2; }
};

/// Recovers the blowup order of a point-resolution tower by reverse
/// contraction of the unique (-1)-curve. Forward order. Throws TowerError
/// when the graph is not such a tower.
std::vector<TowerStep> reconstruct_tower(const DualGraph& g);

/// Type (r_1,...,r_m): lengths of the maximal inner-blowup blocks, with the
/// first blowup counted as outer. A (-1)-tip is first removed by the minimal
/// contraction; the zero divisor and [(2)_s,1] give (0).
ChainType graph_type(const MarkedResolution& m);

/// Marks a contractible chain: locates the unique (-1)-curve and computes its
/// total-transform multiplicity by forward coefficient replay.
MarkedResolution mark_chain(const Chain& chain);

/// Component ids of the first branch (first outer block + first inner block
/// of the reconstructed blowup sequence). Requires the (-1)-curve not to be
/// a tip.
std::vector<int> first_branch(const MarkedResolution& m);

/// All contractible chains with a unique (-1)-curve of type (r), for every
/// number of leading 2s k in [0, k_max]; sorted lexicographically.
std::vector<Chain> enumerate_chains(int r, int k_max, int r_cap = 6);

/// mu(U) <= F_{K.Q+3}. Requires K.Q >= -1.
bool fibonacci_bound_holds(const MarkedResolution& m);

/// Inverse of build_resolution_graph on chains: characteristic pairs read off
/// a contractible chain with a unique (-1)-curve ((-1)-tips contribute
/// trailing (1,1) pairs).
CharPairSeq char_pairs_of(const Chain& chain);

} // namespace cuspcal
