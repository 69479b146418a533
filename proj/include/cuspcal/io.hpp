#pragma once

#include <string>

#include "cuspcal/invariants.hpp"
#include "cuspcal/search.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace cuspcal {

using Json = nlohmann::ordered_json;

/// Bracket shorthand for chains: "[(2)_3,3,1,2]" expands to [2,2,2,3,1,2];
/// "(w)_{-1}" deletes the previous entry. Throws DomainError on malformed
/// input.
Chain parse_chain_shorthand(const std::string& text);
std::string format_chain(const Chain& chain);

/// {"nodes":[{"id","selfInt","genusDefect","label"?}],"edges":[{"a","b","mult"}]}
Json graph_to_json(const DualGraph& g);
DualGraph graph_from_json(const Json& j);

/// [[c,p],...]
Json pairs_to_json(const CharPairSeq& s);
CharPairSeq pairs_from_json(const Json& j);

/// {"degree":d,"gamma":g,"cusps":[{"pairs":[[c,p],...],"rho":r}]}
Json candidate_to_json(const CurveCandidate& cand);
CurveCandidate candidate_from_json(const Json& j);

Json qdivisor_to_json(const QDivisor& d);
Json final_search_to_json(const FinalSearchResult& r);
Json cases_to_json(const std::vector<EliminationCase>& cases);
Json solutions_to_json(const std::vector<DiophantineSolution>& sols);

/// Exact scalar encodings: integers as JSON numbers when they fit 64 bits,
/// decimal strings otherwise; rationals always as "num/den" strings.
Json bigint_to_json(const BigInt& v);
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& text);

std::string type_to_string(const ChainType& t);

/// Undirected DOT document; node labels carry self-intersection and genus
/// defect, edge labels the multiplicity when > 1. Node order follows ids.
std::string emit_dot(const DualGraph& g);

} // namespace cuspcal
