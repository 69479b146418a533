// Command-line front end for the cusp resolution calculus.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cuspcal/io.hpp"

namespace {

using cuspcal::Json;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "table"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write output to FILE instead of standard output");
}

void write_output(const OutputOptions& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opts.out_path, std::ios::binary);
    if (!f)
        throw cuspcal::DomainError("cannot open output file " + opts.out_path);
    f << text;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

// Thrown for malformed user input; maps to exit code 2.
struct ParseFailure {
    std::string message;
};

Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseFailure{"malformed " + what + ": " + e.what()};
    }
}

// dot only makes sense for commands that emit a graph
void require_tabular(const OutputOptions& opts, const char* command) {
    if (opts.format == "dot")
        throw ParseFailure{std::string(command) + " does not produce DOT output"};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw ParseFailure{"cannot read file " + path};
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

cuspcal::Chain parse_chain_arg(const std::string& text) {
    try {
        return cuspcal::parse_chain_shorthand(text);
    } catch (const cuspcal::Error& e) {
        throw ParseFailure{e.what()};
    }
}

cuspcal::CharPairSeq parse_pairs_arg(const std::string& text) {
    try {
        return cuspcal::pairs_from_json(parse_json_text(text, "pair sequence"));
    } catch (const cuspcal::Error& e) {
        throw ParseFailure{e.what()};
    } catch (const nlohmann::json::exception& e) {
        throw ParseFailure{std::string("malformed pair sequence: ") + e.what()};
    }
}

// Graph input: bracket shorthand for chains or a GraphDocument (inline/file).
struct GraphInput {
    std::string chain_text;
    std::string graph_text;
    std::string graph_file;

    void add_flags(CLI::App* cmd) {
        auto* a = cmd->add_option("--chain", chain_text, "Chain shorthand, e.g. \"[(2)_3,3,1,2]\"");
        auto* b = cmd->add_option("--graph", graph_text, "Inline graph JSON document");
        auto* c = cmd->add_option("--graph-file", graph_file, "Path to a graph JSON document");
        a->excludes(b)->excludes(c);
        b->excludes(c);
    }

    cuspcal::DualGraph load() const {
        if (!chain_text.empty())
            return cuspcal::DualGraph::from_chain(parse_chain_arg(chain_text));
        std::string text;
        if (!graph_text.empty())
            text = graph_text;
        else if (!graph_file.empty())
            text = slurp(graph_file);
        else
            throw ParseFailure{"one of --chain, --graph, --graph-file is required"};
        try {
            return cuspcal::graph_from_json(parse_json_text(text, "graph document"));
        } catch (const cuspcal::Error& e) {
            throw ParseFailure{e.what()};
        } catch (const nlohmann::json::exception& e) {
            throw ParseFailure{std::string("malformed graph document: ") + e.what()};
        }
    }
};

std::vector<cuspcal::BigInt> parse_coeff_list(const std::string& text, const std::string& what) {
    std::vector<cuspcal::BigInt> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.emplace_back(item);
        } catch (const std::exception&) {
            throw ParseFailure{"malformed integer \"" + item + "\" in " + what};
        }
    }
    if (out.empty())
        throw ParseFailure{what + " must list at least the constant term"};
    return out;
}

std::string cases_table(const std::vector<cuspcal::EliminationCase>& cases) {
    std::ostringstream os;
    for (const cuspcal::EliminationCase& c : cases)
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "\n      " << c.statement
           << "\n      expected: " << c.expected << "\n      computed: " << c.computed << "\n";
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Exact calculus for dual graphs, characteristic pairs and the"
                 " bounded integer searches of cuspidal-curve resolutions"};
    app.require_subcommand(1);

    // resolve
    auto* resolve = app.add_subcommand("resolve", "Resolution graph of a characteristic pair sequence");
    std::string resolve_pairs;
    resolve->add_option("--pairs", resolve_pairs, "JSON pair list, e.g. \"[[3,2]]\"")->required();
    OutputOptions resolve_out;
    add_output_flags(resolve, resolve_out);

    // type
    auto* type_cmd = app.add_subcommand("type", "Type (r_1,...,r_m) of an exceptional graph");
    GraphInput type_in;
    type_in.add_flags(type_cmd);
    OutputOptions type_out;
    add_output_flags(type_cmd, type_out);

    // discriminant
    auto* disc = app.add_subcommand("discriminant", "d(D) = det(-Q(D))");
    GraphInput disc_in;
    disc_in.add_flags(disc);
    OutputOptions disc_out;
    add_output_flags(disc, disc_out);

    // inductance
    auto* ind = app.add_subcommand("inductance", "Inductance of a twig (tip first)");
    std::string ind_chain;
    ind->add_option("--chain", ind_chain, "Twig weights, tip first")->required();
    OutputOptions ind_out;
    add_output_flags(ind, ind_out);

    // bark
    auto* bark_cmd = app.add_subcommand("bark", "Bark coefficients of a twig (tip first)");
    std::string bark_chain;
    bark_cmd->add_option("--chain", bark_chain, "Twig weights, tip first")->required();
    OutputOptions bark_out;
    add_output_flags(bark_cmd, bark_out);

    // contract
    auto* contract = app.add_subcommand("contract", "Contractibility to a smooth point");
    GraphInput contract_in;
    contract_in.add_flags(contract);
    OutputOptions contract_out;
    add_output_flags(contract, contract_out);

    // enumerate-chains
    auto* enumc = app.add_subcommand("enumerate-chains",
                                     "Contractible chains with a unique (-1)-curve of a given type");
    int enum_r = 0, enum_k = 0, enum_cap = 6;
    enumc->add_option("--r", enum_r, "Type (r)")->required();
    enumc->add_option("--k", enum_k, "Maximal number of leading 2s")->required();
    enumc->add_option("--cap", enum_cap, "Safety cap on r")->capture_default_str();
    OutputOptions enum_out;
    add_output_flags(enumc, enum_out);

    // cusp-invariants
    auto* cusp = app.add_subcommand("cusp-invariants", "M, I and the multiplicity of a cusp");
    std::string cusp_pairs;
    cusp->add_option("--pairs", cusp_pairs, "JSON pair list")->required();
    OutputOptions cusp_out;
    add_output_flags(cusp, cusp_out);

    // check-degree
    auto* check = app.add_subcommand("check-degree", "Degree equation residuals of a candidate");
    std::string cand_text, cand_file;
    auto* cj = check->add_option("--candidate", cand_text, "Inline candidate JSON");
    auto* cf = check->add_option("--candidate-file", cand_file, "Path to candidate JSON");
    cj->excludes(cf);
    OutputOptions check_out;
    add_output_flags(check, check_out);

    // bmy
    auto* bmy = app.add_subcommand("bmy", "Logarithmic Bogomolov-Miyaoka-Yau predicate");
    std::string bmy_kd, bmy_ind, bmy_chi;
    bmy->add_option("--kd-sq", bmy_kd, "(K+D)^2")->required();
    bmy->add_option("--ind", bmy_ind, "ind(D), e.g. \"1/2\"")->required();
    bmy->add_option("--chi", bmy_chi, "chi(X minus D)")->required();
    OutputOptions bmy_out;
    add_output_flags(bmy, bmy_out);

    // bookkeeping
    auto* book = app.add_subcommand("bookkeeping", "Minimalization-process bookkeeping and bounds");
    cuspcal::BoundProfile profile;
    book->add_option("--p2", profile.p2)->required();
    book->add_option("--zeta", profile.zeta)->required();
    book->add_option("--gamma0", profile.gamma0)->required();
    book->add_option("--tau-star", profile.tau_star)->capture_default_str();
    book->add_option("--s", profile.s)->capture_default_str();
    book->add_option("--c", profile.c)->capture_default_str();
    book->add_option("--n", profile.n)->capture_default_str();
    book->add_option("--n1", profile.n1)->capture_default_str();
    OutputOptions book_out;
    add_output_flags(book, book_out);

    // solve-system
    auto* solve = app.add_subcommand("solve-system", "Exhaustive linear+quadratic integer system");
    std::string lin_text, quad_text;
    long long solve_dmin = 1;
    std::vector<std::string> extra_texts;
    solve->add_option("--linear", lin_text, "a0,b1,b2,... meaning 3d = a0 + sum b_i k_i")->required();
    solve->add_option("--quadratic", quad_text, "a0,b1,b2,... meaning d^2 = a0 + sum b_i k_i")
        ->required();
    solve->add_option("--d-min", solve_dmin, "Smallest admissible d")->capture_default_str();
    solve->add_option("--require", extra_texts,
                      "Extra constraint \"c1,c2,...:min\" meaning sum c_i k_i >= min");
    OutputOptions solve_out;
    add_output_flags(solve, solve_out);

    // final-search
    auto* final_cmd = app.add_subcommand("final-search", "Terminal quadratic search with the twig filter");
    cuspcal::FinalSearchParams fparams;
    final_cmd->add_option("--gamma-min", fparams.gamma_min)->capture_default_str();
    final_cmd->add_option("--gamma-max", fparams.gamma_max)->capture_default_str();
    final_cmd->add_option("--p-max", fparams.p_max)->capture_default_str();
    final_cmd->add_option("--d-min", fparams.d_min)->capture_default_str();
    OutputOptions final_out;
    add_output_flags(final_cmd, final_out);

    // paper-suite
    auto* suite = app.add_subcommand("paper-suite", "Re-run every recorded arithmetic elimination");
    OutputOptions suite_out;
    add_output_flags(suite, suite_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (resolve->parsed()) {
        cuspcal::CharPairSeq s = parse_pairs_arg(resolve_pairs);
        cuspcal::MarkedResolution m = cuspcal::build_resolution_graph(s);
        if (resolve_out.format == "dot") {
            write_output(resolve_out, cuspcal::emit_dot(m.graph));
            return 0;
        }
        cuspcal::ChainType t = cuspcal::graph_type(m);
        Json j{{"graph", cuspcal::graph_to_json(m.graph)},
               {"minusOne", m.minus_one},
               {"mu", cuspcal::bigint_to_json(m.mu)},
               {"type", cuspcal::type_to_string(t)}};
        if (resolve_out.format == "table") {
            std::ostringstream os;
            os << "components: " << m.graph.order() << "\n";
            auto chain = cuspcal::as_chain(m.graph);
            if (chain)
                os << "chain: " << cuspcal::format_chain(*chain) << "\n";
            os << "minus-one: " << m.minus_one << "\nmu: " << m.mu
               << "\ntype: " << cuspcal::type_to_string(t) << "\n";
            write_output(resolve_out, os.str());
        } else {
            write_output(resolve_out, render_json(j));
        }
        return 0;
    }

    if (type_cmd->parsed()) {
        require_tabular(type_out, "type");
        cuspcal::DualGraph g = type_in.load();
        cuspcal::MarkedResolution m;
        if (g.empty()) {
            m = cuspcal::MarkedResolution{g, -1, 0};
        } else {
            int u = -1;
            for (const cuspcal::Component& c : g.components())
                if (c.self_int == -1 && c.genus_defect == 0 && u < 0)
                    u = c.id;
            m = cuspcal::MarkedResolution{g, u, 0};
        }
        std::string t = cuspcal::type_to_string(cuspcal::graph_type(m));
        write_output(type_out, type_out.format == "table" ? t + "\n"
                                                          : render_json(Json{{"type", t}}));
        return 0;
    }

    if (disc->parsed()) {
        require_tabular(disc_out, "discriminant");
        cuspcal::DualGraph g = disc_in.load();
        cuspcal::BigInt d = cuspcal::discriminant(g);
        Json j{{"discriminant", cuspcal::bigint_to_json(d)},
               {"negativeDefinite", cuspcal::is_negative_definite(g)}};
        write_output(disc_out, disc_out.format == "table" ? d.str() + "\n" : render_json(j));
        return 0;
    }

    if (ind->parsed()) {
        require_tabular(ind_out, "inductance");
        cuspcal::Chain c = parse_chain_arg(ind_chain);
        cuspcal::Rational q = cuspcal::inductance(c);
        std::string s = cuspcal::rational_to_string(q);
        write_output(ind_out, ind_out.format == "table" ? s + "\n"
                                                        : render_json(Json{{"inductance", s}}));
        return 0;
    }

    if (bark_cmd->parsed()) {
        require_tabular(bark_out, "bark");
        cuspcal::Chain c = parse_chain_arg(bark_chain);
        cuspcal::DualGraph g = cuspcal::DualGraph::from_chain(c);
        std::vector<int> ids;
        for (const cuspcal::Component& comp : g.components())
            ids.push_back(comp.id);
        cuspcal::QDivisor bk = cuspcal::bark(g, ids);
        if (bark_out.format == "table") {
            std::ostringstream os;
            for (const auto& [id, coeff] : bk.coefficients)
                os << id << ": " << cuspcal::rational_to_string(coeff) << "\n";
            write_output(bark_out, os.str());
        } else {
            Json j{{"coefficients", cuspcal::qdivisor_to_json(bk)},
                   {"square", cuspcal::rational_to_string(bk.self_intersection(g))}};
            write_output(bark_out, render_json(j));
        }
        return 0;
    }

    if (contract->parsed()) {
        require_tabular(contract_out, "contract");
        cuspcal::DualGraph g = contract_in.load();
        bool ok = cuspcal::contracts_to_smooth_point(g);
        write_output(contract_out, contract_out.format == "table"
                                       ? std::string(ok ? "yes" : "no") + "\n"
                                       : render_json(Json{{"contracts", ok}}));
        return ok ? 0 : 1;
    }

    if (enumc->parsed()) {
        require_tabular(enum_out, "enumerate-chains");
        std::vector<cuspcal::Chain> chains = cuspcal::enumerate_chains(enum_r, enum_k, enum_cap);
        if (enum_out.format == "table") {
            std::ostringstream os;
            for (const cuspcal::Chain& c : chains)
                os << cuspcal::format_chain(c) << "\n";
            write_output(enum_out, os.str());
        } else {
            Json arr = Json::array();
            for (const cuspcal::Chain& c : chains)
                arr.push_back(c.weights);
            write_output(enum_out, render_json(Json{{"chains", std::move(arr)}}));
        }
        return 0;
    }

    if (cusp->parsed()) {
        require_tabular(cusp_out, "cusp-invariants");
        cuspcal::CharPairSeq s = parse_pairs_arg(cusp_pairs);
        cuspcal::CuspInvariants inv = cuspcal::cusp_invariants(s);
        Json j{{"M", cuspcal::bigint_to_json(inv.m)},
               {"I", cuspcal::bigint_to_json(inv.i)},
               {"mult", inv.mult}};
        if (cusp_out.format == "table") {
            std::ostringstream os;
            os << "M: " << inv.m << "\nI: " << inv.i << "\nmult: " << inv.mult << "\n";
            write_output(cusp_out, os.str());
        } else {
            write_output(cusp_out, render_json(j));
        }
        return 0;
    }

    if (check->parsed()) {
        require_tabular(check_out, "check-degree");
        std::string text = !cand_text.empty() ? cand_text
                           : !cand_file.empty() ? slurp(cand_file)
                                                : throw ParseFailure{"--candidate or --candidate-file required"};
        cuspcal::CurveCandidate cand;
        try {
            cand = cuspcal::candidate_from_json(parse_json_text(text, "candidate"));
        } catch (const cuspcal::Error& e) {
            throw ParseFailure{e.what()};
        } catch (const nlohmann::json::exception& e) {
            throw ParseFailure{std::string("malformed candidate: ") + e.what()};
        }
        auto res = cuspcal::degree_equation_residuals(cand);
        bool consistent = res[0] == 0 && res[1] == 0 && res[2] == 0;
        Json j{{"residuals", Json::array({cuspcal::bigint_to_json(res[0]),
                                          cuspcal::bigint_to_json(res[1]),
                                          cuspcal::bigint_to_json(res[2])})},
               {"consistent", consistent}};
        if (check_out.format == "table") {
            std::ostringstream os;
            os << "residuals: (" << res[0] << "," << res[1] << "," << res[2] << ")\n"
               << (consistent ? "consistent" : "inconsistent") << "\n";
            write_output(check_out, os.str());
        } else {
            write_output(check_out, render_json(j));
        }
        return consistent ? 0 : 1;
    }

    if (bmy->parsed()) {
        require_tabular(bmy_out, "bmy");
        cuspcal::BigInt kd, chi;
        cuspcal::Rational indval;
        try {
            kd = cuspcal::BigInt(bmy_kd);
            chi = cuspcal::BigInt(bmy_chi);
        } catch (const std::exception&) {
            throw ParseFailure{"--kd-sq and --chi must be integers"};
        }
        indval = cuspcal::rational_from_string(bmy_ind);
        bool holds = cuspcal::bmy_holds(kd, indval, chi);
        write_output(bmy_out, bmy_out.format == "table"
                                  ? std::string(holds ? "holds" : "fails") + "\n"
                                  : render_json(Json{{"holds", holds}}));
        return holds ? 0 : 1;
    }

    if (book->parsed()) {
        require_tabular(book_out, "bookkeeping");
        auto [kk, ek] = cuspcal::mmp_bookkeeping(profile);
        std::vector<std::string> violations = cuspcal::bound_profile_feasible(profile);
        std::vector<std::string> cn1 = cuspcal::cn1_violations(profile);
        Json j{{"kk", kk},
               {"ek", ek},
               {"violations", violations},
               {"cn1Violations", cn1},
               {"feasible", violations.empty()}};
        if (book_out.format == "table") {
            std::ostringstream os;
            os << "K.(K+D): " << kk << "\nE.(K+D): " << ek << "\nfeasible: "
               << (violations.empty() ? "yes" : "no") << "\n";
            for (const std::string& v : violations)
                os << "violated: " << v << "\n";
            for (const std::string& v : cn1)
                os << "outside classification: " << v << "\n";
            write_output(book_out, os.str());
        } else {
            write_output(book_out, render_json(j));
        }
        return violations.empty() ? 0 : 1;
    }

    if (solve->parsed()) {
        require_tabular(solve_out, "solve-system");
        std::vector<cuspcal::BigInt> lin = parse_coeff_list(lin_text, "--linear");
        std::vector<cuspcal::BigInt> quad = parse_coeff_list(quad_text, "--quadratic");
        cuspcal::DiophantineSystem sys;
        sys.lin_a0 = lin.front();
        sys.lin_b.assign(lin.begin() + 1, lin.end());
        sys.quad_a0 = quad.front();
        sys.quad_b.assign(quad.begin() + 1, quad.end());
        sys.d_min = solve_dmin;
        for (const std::string& text : extra_texts) {
            std::size_t colon = text.find(':');
            if (colon == std::string::npos)
                throw ParseFailure{"--require needs the form \"c1,c2,...:min\""};
            cuspcal::DiophantineSystem::ExtraConstraint extra;
            extra.coeffs = parse_coeff_list(text.substr(0, colon), "--require");
            try {
                extra.min_value = cuspcal::BigInt(text.substr(colon + 1));
            } catch (const std::exception&) {
                throw ParseFailure{"malformed bound in --require"};
            }
            sys.extras.push_back(std::move(extra));
        }
        auto sols = cuspcal::solve_linear_quadratic(sys);
        if (solve_out.format == "table") {
            std::ostringstream os;
            for (const auto& s : sols) {
                os << "d=" << s.d;
                for (std::size_t i = 0; i < s.k.size(); ++i)
                    os << " k" << (i + 1) << "=" << s.k[i];
                os << "\n";
            }
            os << sols.size() << " solution(s)\n";
            write_output(solve_out, os.str());
        } else {
            write_output(solve_out, render_json(Json{{"solutions", cuspcal::solutions_to_json(sols)}}));
        }
        return 0;
    }

    if (final_cmd->parsed()) {
        require_tabular(final_out, "final-search");
        cuspcal::FinalSearchResult r = cuspcal::final_search(fparams);
        if (final_out.format == "table") {
            std::ostringstream os;
            for (const auto& e : r.solutions)
                os << "gamma=" << e.gamma << " p=" << e.p << " d=" << e.d << " c=" << e.c
                   << " r=" << e.r << (e.gcd_coprime ? "" : " [gcd>1]") << " lhs="
                   << cuspcal::rational_to_string(e.lhs)
                   << (e.passes_gamma_final ? " ADMISSIBLE" : " rejected") << "\n";
            os << r.solutions.size() << " solution(s)\n";
            write_output(final_out, os.str());
        } else {
            write_output(final_out, render_json(cuspcal::final_search_to_json(r)));
        }
        return 0;
    }

    if (suite->parsed()) {
        require_tabular(suite_out, "paper-suite");
        std::vector<cuspcal::EliminationCase> cases = cuspcal::paper_case_suite();
        bool all_pass = true;
        for (const cuspcal::EliminationCase& c : cases)
            all_pass = all_pass && c.pass;
        if (suite_out.format == "table")
            write_output(suite_out, cases_table(cases));
        else
            write_output(suite_out, render_json(cuspcal::cases_to_json(cases)));
        return all_pass ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseFailure& e) {
        std::cerr << Json{{"error", {{"type", "parse-error"}, {"message", e.message}}}}.dump()
                  << "\n";
        return 2;
    } catch (const cuspcal::Error& e) {
        std::cerr << Json{{"error", {{"type", e.code()}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", {{"type", "internal"}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    }
}
