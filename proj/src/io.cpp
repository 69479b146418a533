#include "cuspcal/io.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace cuspcal {

namespace {

struct ShorthandScanner {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            throw DomainError("chain shorthand: expected '" + std::string(1, c) + "' at offset " +
                              std::to_string(pos) + " in \"" + s + "\"");
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
            ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw DomainError("chain shorthand: expected an integer at offset " +
                              std::to_string(start) + " in \"" + s + "\"");
        return std::stoll(s.substr(start, pos - start));
    }
};

} // namespace

Chain parse_chain_shorthand(const std::string& text) {
    ShorthandScanner sc{text};
    sc.expect('[');
    Chain chain;
    sc.skip_ws();
    if (sc.eat(']')) {
        sc.skip_ws();
        if (sc.pos != text.size())
            throw DomainError("chain shorthand: trailing characters in \"" + text + "\"");
        return chain;
    }
    while (true) {
        sc.skip_ws();
        if (sc.eat('(')) {
            long long w = sc.integer();
            sc.expect(')');
            sc.expect('_');
            long long count;
            if (sc.eat('{')) {
                count = sc.integer();
                sc.expect('}');
            } else {
                count = sc.integer();
            }
            if (count < -1)
                throw DomainError("chain shorthand: repeat count below -1");
            if (count == -1) {
                // (w)_{-1} deletes the previous entry.
                if (chain.weights.empty())
                    throw DomainError("chain shorthand: (w)_{-1} with nothing to delete");
                chain.weights.pop_back();
            } else {
                if (w < 1)
                    throw DomainError("chain shorthand: weight must be >= 1");
                for (long long i = 0; i < count; ++i)
                    chain.weights.push_back(static_cast<int>(w));
            }
        } else {
            long long w = sc.integer();
            if (w < 1)
                throw DomainError("chain shorthand: weight must be >= 1");
            chain.weights.push_back(static_cast<int>(w));
        }
        if (sc.eat(']'))
            break;
        sc.expect(',');
    }
    sc.skip_ws();
    if (sc.pos != text.size())
        throw DomainError("chain shorthand: trailing characters in \"" + text + "\"");
    return chain;
}

std::string format_chain(const Chain& chain) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < chain.weights.size(); ++i)
        os << (i ? "," : "") << chain.weights[i];
    os << "]";
    return os.str();
}

Json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q) << "/" << denominator(q);
    return os.str();
}

Rational rational_from_string(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0)
            throw DomainError("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw DomainError("malformed rational \"" + text + "\"");
    }
}

std::string type_to_string(const ChainType& t) {
    if (t.is_zero())
        return "(0)";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.r.size(); ++i)
        os << (i ? "," : "") << t.r[i];
    os << ")";
    return os.str();
}

Json graph_to_json(const DualGraph& g) {
    Json nodes = Json::array();
    for (const Component& c : g.components()) {
        Json n;
        n["id"] = c.id;
        n["selfInt"] = c.self_int;
        n["genusDefect"] = c.genus_defect;
        if (!c.label.empty())
            n["label"] = c.label;
        nodes.push_back(std::move(n));
    }
    Json edges = Json::array();
    for (const DualGraph::Edge& e : g.edges())
        edges.push_back(Json{{"a", e.a}, {"b", e.b}, {"mult", e.mult}});
    return Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

namespace {

int checked_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw DomainError(std::string("graph document: ") + what + " must be an integer");
    long long v = j.get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw DomainError(std::string("graph document: ") + what + " out of range");
    return static_cast<int>(v);
}

} // namespace

DualGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("edges"))
        throw DomainError("graph document needs \"nodes\" and \"edges\"");
    DualGraph g;
    for (const Json& n : j.at("nodes")) {
        int id = checked_int(n.at("id"), "node id");
        int self_int = checked_int(n.at("selfInt"), "selfInt");
        int genus = n.contains("genusDefect") ? checked_int(n.at("genusDefect"), "genusDefect") : 0;
        std::string label = n.value("label", std::string{});
        g.add_component_with_id(id, self_int, genus, std::move(label));
    }
    for (const Json& e : j.at("edges")) {
        int a = checked_int(e.at("a"), "edge endpoint");
        int b = checked_int(e.at("b"), "edge endpoint");
        int mult = e.contains("mult") ? checked_int(e.at("mult"), "edge mult") : 1;
        g.add_edge(a, b, mult);
    }
    return g;
}

Json pairs_to_json(const CharPairSeq& s) {
    Json out = Json::array();
    for (const CharPair& pr : s.pairs)
        out.push_back(Json::array({pr.c, pr.p}));
    return out;
}

CharPairSeq pairs_from_json(const Json& j) {
    if (!j.is_array())
        throw DomainError("pair sequence must be a JSON array of [c,p] pairs");
    CharPairSeq s;
    for (const Json& item : j) {
        if (!item.is_array() || item.size() != 2)
            throw DomainError("each characteristic pair must be a [c,p] array");
        s.pairs.push_back(CharPair{item[0].get<long long>(), item[1].get<long long>()});
    }
    return s;
}

Json candidate_to_json(const CurveCandidate& cand) {
    Json cusps = Json::array();
    for (const CurveCandidate::Cusp& cusp : cand.cusps)
        cusps.push_back(Json{{"pairs", pairs_to_json(cusp.pairs)}, {"rho", cusp.rho}});
    return Json{{"degree", cand.degree}, {"gamma", cand.gamma}, {"cusps", std::move(cusps)}};
}

CurveCandidate candidate_from_json(const Json& j) {
    CurveCandidate cand;
    cand.degree = j.at("degree").get<long long>();
    cand.gamma = j.at("gamma").get<long long>();
    for (const Json& cusp : j.at("cusps")) {
        CurveCandidate::Cusp c;
        c.pairs = pairs_from_json(cusp.at("pairs"));
        c.rho = cusp.value("rho", 1LL);
        cand.cusps.push_back(std::move(c));
    }
    return cand;
}

Json qdivisor_to_json(const QDivisor& d) {
    Json out = Json::array();
    for (const auto& [id, coeff] : d.coefficients)
        out.push_back(Json{{"component", id}, {"coefficient", rational_to_string(coeff)}});
    return out;
}

Json final_search_to_json(const FinalSearchResult& r) {
    Json sols = Json::array();
    for (const FinalSearchEntry& e : r.solutions) {
        sols.push_back(Json{{"gamma", e.gamma},
                            {"p", e.p},
                            {"d", e.d},
                            {"c", e.c},
                            {"r", e.r},
                            {"gcdCoprime", e.gcd_coprime},
                            {"lhs", rational_to_string(e.lhs)},
                            {"passesGammaFinal", e.passes_gamma_final}});
    }
    return Json{{"solutions", std::move(sols)}};
}

Json cases_to_json(const std::vector<EliminationCase>& cases) {
    Json out = Json::array();
    for (const EliminationCase& c : cases)
        out.push_back(Json{{"name", c.name},
                           {"statement", c.statement},
                           {"expected", c.expected},
                           {"computed", c.computed},
                           {"pass", c.pass}});
    return out;
}

Json solutions_to_json(const std::vector<DiophantineSolution>& sols) {
    Json out = Json::array();
    for (const DiophantineSolution& s : sols) {
        Json item;
        item["d"] = bigint_to_json(s.d);
        Json k = Json::array();
        for (const BigInt& kv : s.k)
            k.push_back(bigint_to_json(kv));
        item["k"] = std::move(k);
        out.push_back(std::move(item));
    }
    return out;
}

std::string emit_dot(const DualGraph& g) {
    std::ostringstream os;
    os << "graph dual {\n";
    os << "  node [shape=circle];\n";
    for (const Component& c : g.components()) {
        os << "  n" << c.id << " [label=\"";
        if (!c.label.empty())
            os << c.label << "\\n";
        os << c.self_int;
        if (c.genus_defect > 0)
            os << " g" << c.genus_defect;
        os << "\"];\n";
    }
    for (const DualGraph::Edge& e : g.edges()) {
        os << "  n" << e.a << " -- n" << e.b;
        if (e.mult > 1)
            os << " [label=\"" << e.mult << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace cuspcal
