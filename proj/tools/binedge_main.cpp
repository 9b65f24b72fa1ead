// Command-line front door: parse graphs, dispatch, render JSON or text.
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "binedge/betti.hpp"
#include "binedge/buchberger.hpp"
#include "binedge/caterpillar.hpp"
#include "binedge/closedness.hpp"
#include "binedge/corpus.hpp"
#include "binedge/io.hpp"
#include "binedge/primes.hpp"
#include "binedge/verify.hpp"

using nlohmann::json;
using namespace binedge;

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitGuard = 2;
constexpr int kExitVerify = 3;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

struct CommonArgs {
    std::string input;
    std::string format = "auto";
    std::string labeling;
    int max_n = 0; // 0 = command default
    std::uint64_t seed = 42;
    bool pretty = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_input = true) {
    auto* opt = cmd->add_option("--input,-i", args.input,
                                "graph file (JSON or plain text), or inline JSON");
    if (needs_input) opt->required();
    cmd->add_option("--format", args.format, "input format: auto, json, edges")
        ->check(CLI::IsMember({"auto", "json", "edges"}));
    cmd->add_option("--labeling", args.labeling,
                    "inline permutation l1,l2,... applied to the graph first");
    cmd->add_option("--max-n", args.max_n, "size guard for searches");
    cmd->add_option("--seed", args.seed, "seed for randomized corpora");
    cmd->add_flag("--pretty", args.pretty, "human-readable output instead of JSON");
    cmd->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");
}

Graph load_input(const CommonArgs& args) {
    Graph g;
    auto pos = args.input.find_first_not_of(" \t\n");
    if (pos != std::string::npos && args.input[pos] == '{')
        g = parse_graph_json(args.input, "<inline>");
    else if (args.format == "json")
        g = load_graph(args.input, GraphFormat::json);
    else if (args.format == "edges")
        g = load_graph(args.input, GraphFormat::edges);
    else
        g = load_graph(args.input, GraphFormat::auto_detect);
    if (!args.labeling.empty()) g = apply_labeling(g, parse_labeling(args.labeling, g.n()));
    return g;
}

json labeling_json(const Labeling& lab) {
    return json(lab.to_vector());
}

json element_json(const GroebnerElement& el) {
    return json{{"path", el.path.vertices},
                {"x", el.x_support},
                {"y", el.y_support},
                {"edge", {el.edge.first, el.edge.second}},
                {"text", el.to_text()}};
}

json component_json(const PrimeComponent& pc) {
    return json{{"s", pc.s}, {"components", pc.components}, {"dim", pc.dim_contribution}};
}

std::string set_text(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

// Every command reports through the same envelope; the pretty renderer is a
// thin layer over the identical payload.
void emit(const CommonArgs& args, const std::string& command, const json& guards,
          const json& result, const std::string& pretty_text) {
    if (args.pretty) {
        std::cout << pretty_text;
        return;
    }
    json doc{{"tool", "binedge"},
             {"version", kVersion},
             {"command", command},
             {"guards", guards},
             {"seed", args.seed},
             {"result", result}};
    std::cout << doc.dump(2) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"binomial edge ideal toolkit: admissible-path bases, closure "
                 "numbers, caterpillar labelings, prime components"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CommonArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "classify a graph and summarize its basis");
    add_common(analyze, analyze_args);

    CommonArgs groebner_args;
    auto* groebner_cmd = app.add_subcommand("groebner", "list the reduced basis elements");
    add_common(groebner_cmd, groebner_args);
    bool groebner_oracle = false;
    groebner_cmd->add_flag("--oracle", groebner_oracle,
                           "also certify against the exact-arithmetic engine");

    CommonArgs mclosed_args;
    auto* mclosed = app.add_subcommand("mclosed", "exact closure number over all labelings");
    add_common(mclosed, mclosed_args);
    bool symmetry = false;
    mclosed->add_flag("--symmetry", symmetry, "fix label 1 to automorphism orbit representatives");

    CommonArgs closed_args;
    auto* closed_check = app.add_subcommand("closed-check", "test the given labels for closedness");
    add_common(closed_check, closed_args);

    CommonArgs weakly_args;
    auto* weakly = app.add_subcommand("weakly-closed", "weak closedness by labeling search");
    add_common(weakly, weakly_args);
    bool weakly_labeling_only = false;
    weakly->add_flag("--labeling-only", weakly_labeling_only,
                     "check the given labels instead of searching");

    CommonArgs tree3_args;
    auto* tree3 = app.add_subcommand("tree3", "3-closedness of a tree via its squared graph");
    add_common(tree3, tree3_args);

    CommonArgs label_args;
    auto* label = app.add_subcommand("label", "construct a distance-2 caterpillar labeling");
    add_common(label, label_args);
    std::string algo = "sweep", variant = "path", join1, join2;
    std::string input2, input3;
    int start = 0, e1 = 0, e2 = 0;
    label->add_option("--algo", algo, "sweep, alg1, bridge, t1bt2")
        ->check(CLI::IsMember({"sweep", "alg1", "bridge", "t1bt2"}));
    label->add_option("--start", start, "start vertex (alg1)");
    label->add_option("--variant", variant, "alg1 variant: path, leaf, assign-n")
        ->check(CLI::IsMember({"path", "leaf", "assign-n"}));
    label->add_option("--input2", input2, "second graph (bridge: right block; t1bt2: middle block)");
    label->add_option("--input3", input3, "third graph (t1bt2: right block)");
    label->add_option("--e1", e1, "bridge endpoint in the first graph");
    label->add_option("--e2", e2, "bridge endpoint in the second graph");
    label->add_option("--join1", join1, "t1bt2 join edge \"a,b\" (t1 vertex, path endpoint)");
    label->add_option("--join2", join2, "t1bt2 join edge \"b,a\" (path endpoint, t2 vertex)");

    CommonArgs cycle_args;
    auto* cycle_label_cmd = app.add_subcommand("cycle-label", "optimal labeling of a cycle");
    add_common(cycle_label_cmd, cycle_args, false);
    int cycle_n = 0;
    cycle_label_cmd->add_option("n", cycle_n, "cycle length")->required();

    CommonArgs primes_args;
    auto* primes_cmd = app.add_subcommand("primes", "minimal prime components");
    add_common(primes_cmd, primes_args);
    bool use_caterpillar = false;
    primes_cmd->add_flag("--caterpillar", use_caterpillar,
                         "use the caterpillar characterization instead of enumeration");

    CommonArgs dim_args;
    auto* dim_cmd = app.add_subcommand("dim", "Krull dimension of the quotient");
    add_common(dim_cmd, dim_args);

    CommonArgs betti_args;
    auto* betti_cmd = app.add_subcommand("betti", "first syzygy counts of the bipartite transform");
    add_common(betti_cmd, betti_args);
    bool cor37 = false, general = false;
    betti_cmd->add_flag("--cor37", cor37, "verify the tree basis-count identity");
    betti_cmd->add_flag("--general", general, "verify the general basis-count identity");

    CommonArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    add_common(verify_cmd, verify_args, false);
    bool verify_all = false, verify_oracle = false, no_oracle = false;
    verify_cmd->add_flag("--all", verify_all, "run every check (default)");
    verify_cmd->add_flag("--oracle", verify_oracle, "run only the basis certification checks");
    verify_cmd->add_flag("--no-oracle", no_oracle, "exclude the basis certification checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (app.got_subcommand(analyze)) {
        Graph g = load_input(analyze_args);
        auto cls = classify(g);
        json result{{"n", g.n()},
                    {"edge_count", g.edge_count()},
                    {"connected", cls.is_connected},
                    {"tree", cls.is_tree},
                    {"path", cls.is_path},
                    {"cycle", cls.is_cycle},
                    {"caterpillar", cls.is_caterpillar},
                    {"bridges", cls.bridges},
                    {"triangles", cls.triangle_count}};
        std::string text;
        if (g.edge_count() > 0) {
            auto stats = basis_stats(groebner_basis(g));
            result["basis"] = {{"size", stats.size},
                               {"max_degree", stats.max_degree},
                               {"degree_histogram", stats.degree_histogram}};
            text = "basis size " + std::to_string(stats.size) + ", max degree " +
                   std::to_string(stats.max_degree) + "\n";
        }
        std::string pretty = "n=" + std::to_string(g.n()) + " m=" +
                             std::to_string(g.edge_count()) +
                             (cls.is_tree ? " tree" : "") + (cls.is_path ? " path" : "") +
                             (cls.is_cycle ? " cycle" : "") +
                             (cls.is_caterpillar ? " caterpillar" : "") + "\n" + text;
        emit(analyze_args, "analyze", json::object(), result, pretty);
        return kExitOk;
    }

    if (app.got_subcommand(groebner_cmd)) {
        Graph g = load_input(groebner_args);
        auto basis = groebner_basis(g);
        auto stats = basis_stats(basis);
        json elements = json::array();
        std::string pretty;
        for (const auto& el : basis) {
            elements.push_back(element_json(el));
            pretty += el.to_text() + "\n";
        }
        json result{{"elements", elements},
                    {"size", stats.size},
                    {"max_degree", stats.max_degree},
                    {"degree_histogram", stats.degree_histogram}};
        json guards = json::object();
        if (groebner_oracle) {
            int guard = groebner_args.max_n ? groebner_args.max_n : 5;
            guards["oracle_max_n"] = guard;
            bool ok = gb::oracle_matches(g, guard);
            result["oracle_matches"] = ok;
            pretty += ok ? "certified against the exact engine\n" : "ORACLE MISMATCH\n";
            if (!ok) {
                emit(groebner_args, "groebner", guards, result, pretty);
                return kExitVerify;
            }
        }
        pretty += "size " + std::to_string(stats.size) + ", max degree " +
                  std::to_string(stats.max_degree) + "\n";
        emit(groebner_args, "groebner", guards, result, pretty);
        return kExitOk;
    }

    if (app.got_subcommand(mclosed)) {
        Graph g = load_input(mclosed_args);
        int guard = mclosed_args.max_n ? mclosed_args.max_n : 9;
        auto rep = closure_number(g, guard, symmetry);
        json result{{"m", rep.m},
                    {"witness", labeling_json(rep.witness)},
                    {"exhaustive", rep.exhaustive},
                    {"searched", rep.searched}};
        std::string pretty = "m = " + std::to_string(rep.m) + " (exhaustive, " +
                             std::to_string(rep.searched) + " nodes)\n";
        emit(mclosed_args, "mclosed", json{{"max_n", guard}}, result, pretty);
        return kExitOk;
    }

    if (app.got_subcommand(closed_check)) {
        Graph g = load_input(closed_args);
        bool closed = is_closed_labeling(g);
        emit(closed_args, "closed-check", json::object(), json{{"closed", closed}},
             closed ? "closed labeling\n" : "not a closed labeling\n");
        return kExitOk;
    }

    if (app.got_subcommand(weakly)) {
        Graph g = load_input(weakly_args);
        if (weakly_labeling_only) {
            bool ok = is_weakly_closed_labeling(g);
            emit(weakly_args, "weakly-closed", json{{"labeling_only", true}},
                 json{{"weakly_closed_labeling", ok}},
                 ok ? "weakly closed labeling\n" : "not a weakly closed labeling\n");
            return kExitOk;
        }
        int guard = weakly_args.max_n ? weakly_args.max_n : 9;
        auto rep = weakly_closed_search(g, guard);
        json result{{"weakly_closed", rep.weakly_closed}, {"searched", rep.searched}};
        if (rep.witness) result["witness"] = labeling_json(*rep.witness);
        emit(weakly_args, "weakly-closed", json{{"max_n", guard}}, result,
             rep.weakly_closed ? "weakly closed\n" : "not weakly closed\n");
        return kExitOk;
    }

    if (app.got_subcommand(tree3)) {
        Graph g = load_input(tree3_args);
        auto res = tree_is_3closed(g);
        json result{{"three_closed", res.three_closed}};
        std::string pretty = res.three_closed ? "3-closed\n" : "not 3-closed\n";
        if (res.witness) {
            result["witness"] = labeling_json(*res.witness);
            pretty += "witness: " + json(res.witness->to_vector()).dump() + "\n";
        }
        emit(tree3_args, "tree3", json::object(), result, pretty);
        return kExitOk;
    }

    if (app.got_subcommand(label)) {
        Graph g = load_input(label_args);
        Graph out_graph = g;
        Labeling lab;
        if (algo == "sweep") {
            lab = sweep_labeling(g);
        } else if (algo == "alg1") {
            if (start == 0) throw CLI::ValidationError("--start is required for --algo alg1");
            Alg1Variant v = variant == "path"   ? Alg1Variant::path_start
                            : variant == "leaf" ? Alg1Variant::leaf_start
                                                : Alg1Variant::assign_n;
            lab = algorithm1_labeling(g, start, v);
        } else if (algo == "bridge") {
            if (input2.empty() || e1 == 0 || e2 == 0)
                throw CLI::ValidationError("--algo bridge needs --input2, --e1, --e2");
            CommonArgs second = label_args;
            second.input = input2;
            second.labeling.clear();
            Graph h2 = load_input(second);
            auto [composed, composed_lab] = bridge_compose(
                g, labeling_with_one_at(g, e1), h2, labeling_with_one_at(h2, e2), {e1, e2});
            out_graph = composed;
            lab = composed_lab;
        } else { // t1bt2
            if (input2.empty() || input3.empty() || join1.empty() || join2.empty())
                throw CLI::ValidationError("--algo t1bt2 needs --input2, --input3, --join1, --join2");
            CommonArgs second = label_args, third = label_args;
            second.input = input2;
            second.labeling.clear();
            third.input = input3;
            third.labeling.clear();
            Graph b = load_input(second);
            Graph t2 = load_input(third);
            auto parse_join = [](const std::string& s) {
                auto comma = s.find(',');
                if (comma == std::string::npos) throw ParseError("<join>", 0, "expected \"a,b\"");
                return Edge{std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
            };
            auto [composed, composed_lab] =
                compose_T1_B_T2(g, b, t2, parse_join(join1), parse_join(join2));
            out_graph = composed;
            lab = composed_lab;
        }
        int max_deg = m_of_labeling(apply_labeling(out_graph, lab));
        json result{{"labeling", labeling_json(lab)}, {"max_admissible_degree", max_deg}};
        if (!(out_graph == g)) result["graph"] = json::parse(graph_to_json(out_graph));
        std::string pretty = json(lab.to_vector()).dump() + "\nmax admissible degree = " +
                             std::to_string(max_deg) + "\n";
        emit(label_args, "label", json::object(), result, pretty);
        return kExitOk;
    }

    if (app.got_subcommand(cycle_label_cmd)) {
        Labeling lab = cycle_labeling(cycle_n);
        int max_deg = m_of_labeling(apply_labeling(cycle_graph(cycle_n), lab));
        json result{{"n", cycle_n},
                    {"labeling", labeling_json(lab)},
                    {"max_admissible_degree", max_deg}};
        emit(cycle_args, "cycle-label", json::object(), result,
             json(lab.to_vector()).dump() + "\nmax admissible degree = " +
                 std::to_string(max_deg) + "\n");
        return kExitOk;
    }

    if (app.got_subcommand(primes_cmd)) {
        Graph g = load_input(primes_args);
        int guard = primes_args.max_n ? primes_args.max_n : 20;
        auto list = use_caterpillar ? caterpillar_minimal_primes(g) : minimal_primes(g, guard);
        json result = json::array();
        std::string pretty;
        for (const auto& pc : list) {
            result.push_back(component_json(pc));
            pretty += "S=" + set_text(pc.s) + "; components=[";
            for (size_t c = 0; c < pc.components.size(); ++c)
                pretty += (c ? "," : "") + set_text(pc.components[c]);
            pretty += "]; dim=" + std::to_string(pc.dim_contribution) + "\n";
        }
        emit(primes_args, "primes", json{{"max_n", guard}}, json{{"minimal_primes", result}},
             pretty);
        return kExitOk;
    }

    if (app.got_subcommand(dim_cmd)) {
        Graph g = load_input(dim_args);
        int guard = dim_args.max_n ? dim_args.max_n : 20;
        auto res = krull_dimension(g, guard);
        emit(dim_args, "dim", json{{"max_n", guard}},
             json{{"dimension", res.dimension}, {"witness_s", res.witness_s}},
             std::to_string(res.dimension) + " (S = " + set_text(res.witness_s) + ")\n");
        return kExitOk;
    }

    if (app.got_subcommand(betti_cmd)) {
        Graph g = load_input(betti_args);
        json result;
        std::string pretty;
        bool mismatch = false;
        if (cor37) {
            auto res = verify_cor37(g);
            result = {{"lhs", res.lhs}, {"rhs", res.rhs}, {"beta13", res.beta13},
                      {"equal", res.equal}};
            pretty = "basis size " + std::to_string(res.lhs) + " = (n-1) + beta13 = " +
                     std::to_string(res.rhs) + (res.equal ? " (equal)\n" : " (MISMATCH)\n");
            mismatch = !res.equal;
        } else if (general) {
            auto res = verify_general_remark(g);
            result = {{"lhs", res.lhs},           {"rhs", res.rhs},  {"beta13", res.beta13},
                      {"triangles", res.triangles}, {"equal", res.equal}};
            pretty = "basis size " + std::to_string(res.lhs) +
                     " = |E| + beta13 - 2*triangles = " + std::to_string(res.rhs) +
                     (res.equal ? " (equal)\n" : " (MISMATCH)\n");
            mismatch = !res.equal;
        } else {
            auto cert = beta13_edge_ideal(star_as_graph(star_transform(g)));
            json triples = json::array();
            for (const auto& t : cert.contributing_triples)
                triples.push_back(json{{"w", t.w}, {"rank", t.rank}});
            result = {{"beta13", cert.beta13}, {"contributing_triples", triples}};
            pretty = "beta13 = " + std::to_string(cert.beta13) + "\n";
        }
        emit(betti_args, "betti", json::object(), result, pretty);
        return mismatch ? kExitVerify : kExitOk;
    }

    if (app.got_subcommand(verify_cmd)) {
        verify::Options opt;
        opt.max_n = verify_args.max_n ? verify_args.max_n : 23;
        opt.seed = verify_args.seed;
        opt.with_oracle = !no_oracle;
        opt.only_oracle = verify_oracle && !verify_all;
        auto results = verify::run_all(opt);
        json checks = json::array();
        for (const auto& r : results)
            checks.push_back(json{{"name", r.name},
                                  {"status", r.status},
                                  {"detail", r.detail},
                                  {"seconds", r.seconds}});
        emit(verify_args, "verify",
             json{{"max_n", opt.max_n}, {"oracle", opt.with_oracle || opt.only_oracle}},
             json{{"checks", checks}}, verify::render_table(results));
        return verify::exit_code(results);
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
