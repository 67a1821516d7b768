#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "acr/bisim.hpp"
#include "acr/companion.hpp"
#include "acr/compiler.hpp"
#include "acr/gadget.hpp"
#include "acr/generate.hpp"
#include "acr/gml.hpp"
#include "acr/gnn.hpp"
#include "acr/homcount.hpp"
#include "acr/networks.hpp"
#include "acr/order_check.hpp"
#include "acr/sequences.hpp"
#include "acr/verify.hpp"

namespace {

using namespace acr;

void emit_graph(const FeaturedGraph& g, const std::string& out_path) {
    if (out_path.empty())
        std::cout << write_graph(g);
    else
        save_graph_file(g, out_path);
}

Formula formula_arg(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::exists(arg, ec)) {
        std::ifstream in(arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_formula(ss.str());
    }
    return parse_formula(arg);
}

AcrGnn net_arg(const std::string& name) {
    if (name == "linear-order") return build_linear_order_gnn();
    if (name == "gadget-order") return build_gadget_order_gnn();
    if (name.rfind("compiled:", 0) == 0) return compile(formula_arg(name.substr(9)));
    if (name.rfind("file:", 0) == 0) return load_network_file(name.substr(5));
    throw std::invalid_argument(
        "unknown net '" + name + "' (expected linear-order, gadget-order, compiled:<formula>, "
        "file:<net-file>)");
}

GlobalMode global_arg(const std::string& s) {
    if (s == "none" || s.empty()) return GlobalMode::none();
    if (s == "exact") return GlobalMode::exact();
    if (s.rfind("capped:", 0) == 0) return GlobalMode::capped(std::stoi(s.substr(7)));
    throw std::invalid_argument("bad --global value (none|exact|capped:q)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for ACR-GNN expressivity: featured graphs, graded modal logic, "
                 "exact-rational networks, bisimulations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    int jobs = 1;
    std::string format = "text";
    app.add_option("--seed", seed, "seed for randomized commands");
    app.add_option("--jobs", jobs, "worker threads for verify suites");
    app.add_option("--format", format, "report format: text|tsv")
        ->check(CLI::IsMember({"text", "tsv"}));

    // ---- gen
    auto* gen = app.add_subcommand("gen", "generate graphs in FGR format");
    gen->require_subcommand(1);
    int gen_n = 3, gen_d = 0, gen_maxdeg = -1;
    double gen_prob = 0.5;
    std::string gen_mode = "directed", gen_out;
    std::uint64_t gen_index = 0;
    bool gen_no_loops = false;

    auto* gen_order = gen->add_subcommand("order", "strict linear order on n vertices");
    gen_order->add_option("--n", gen_n, "vertex count")->required();
    gen_order->add_option("--out", gen_out, "output file (stdout otherwise)");
    gen_order->callback([&] { emit_graph(make_strict_linear_order(gen_n), gen_out); });

    auto* gen_random = gen->add_subcommand("random", "seeded random featured graph");
    gen_random->add_option("--n", gen_n)->required();
    gen_random->add_option("--d", gen_d);
    gen_random->add_option("--edge-prob", gen_prob);
    gen_random->add_option("--mode", gen_mode)->check(CLI::IsMember({"directed", "undirected"}));
    gen_random->add_option("--max-outdeg", gen_maxdeg);
    gen_random->add_flag("--no-loops", gen_no_loops);
    gen_random->add_option("--out", gen_out);
    gen_random->callback([&] {
        RandomGraphOptions opt;
        opt.n = gen_n;
        opt.d = gen_d;
        opt.edge_prob = gen_prob;
        opt.mode = gen_mode == "directed" ? Mode::Directed : Mode::Undirected;
        opt.seed = seed;
        opt.loops = !gen_no_loops;
        if (gen_maxdeg >= 0) opt.max_outdeg = gen_maxdeg;
        emit_graph(random_graph(opt), gen_out);
    });

    auto* gen_enum = gen->add_subcommand("enumerate", "graph at an enumeration index");
    gen_enum->add_option("--n", gen_n)->required();
    gen_enum->add_option("--d", gen_d);
    gen_enum->add_option("--index", gen_index)->required();
    gen_enum->add_option("--out", gen_out);
    gen_enum->callback([&] {
        DigraphEnumerator en(gen_n, gen_d);
        emit_graph(en.at(gen_index), gen_out);
    });

    // ---- gadgetise
    auto* gad = app.add_subcommand("gadgetise", "encode a digraph as a 2-featured undirected graph");
    std::string gad_in, gad_out;
    gad->add_option("input", gad_in, "input FGR file")->required();
    gad->add_option("output", gad_out, "output FGR file (stdout otherwise)");
    gad->callback([&] { emit_graph(gadgetise(load_graph_file(gad_in)), gad_out); });

    // ---- hom
    auto* hom = app.add_subcommand("hom", "feature-preserving homomorphism counting");
    std::string hom_pattern, hom_target, hom_p2;
    hom->add_option("--pattern", hom_pattern, "pattern FGR file");
    hom->add_option("--target", hom_target, "target FGR file");
    hom->add_option("--p2", hom_p2, "closed-form P2 count into this digraph");
    hom->callback([&] {
        if (!hom_p2.empty()) {
            std::cout << count_p2(load_graph_file(hom_p2)).get_str() << "\n";
            return;
        }
        if (hom_pattern.empty() || hom_target.empty())
            throw std::invalid_argument("hom needs --pattern and --target, or --p2");
        std::cout << count_homomorphisms(load_graph_file(hom_pattern), load_graph_file(hom_target))
                         .get_str()
                  << "\n";
    });

    // ---- order-check
    auto* oc = app.add_subcommand("order-check", "order predicates and the four counts");
    std::string oc_in;
    oc->add_option("input", oc_in)->required();
    oc->callback([&] {
        FeaturedGraph g = load_graph_file(oc_in);
        Int n = g.n();
        std::cout << "is_strict_linear_order " << (is_strict_linear_order(g) ? 1 : 0) << "\n";
        std::cout << "characterization_holds " << (characterization_holds(g) ? 1 : 0) << "\n";
        std::cout << "edges " << g.edge_count() << "\n";
        std::cout << "binom_n_2 " << binomial(n, 2).get_str() << "\n";
        std::cout << "hom_p2 " << count_p2(g).get_str() << "\n";
        std::cout << "binom_n_3 " << binomial(n, 3).get_str() << "\n";
    });

    // ---- gnn
    auto* gnn = app.add_subcommand("gnn", "run exact-rational networks");
    auto* gnn_run = gnn->add_subcommand("run", "run a network on a pointed graph");
    std::string gnn_net, gnn_graph;
    int gnn_vertex = 0;
    bool gnn_trace = false;
    gnn_run->add_option("--net", gnn_net, "linear-order|gadget-order|compiled:<f>|file:<net>")
        ->required();
    gnn_run->add_option("--graph", gnn_graph)->required();
    gnn_run->add_option("--vertex", gnn_vertex);
    gnn_run->add_flag("--trace", gnn_trace);
    gnn_run->callback([&] {
        AcrGnn net = net_arg(gnn_net);
        FeaturedGraph g = load_graph_file(gnn_graph);
        if (gnn_trace) std::cout << trace_to_text(run_trace(net, g));
        std::cout << "accept " << run(net, g, gnn_vertex) << "\n";
    });

    // ---- gml
    auto* gml = app.add_subcommand("gml", "graded modal logic");
    auto* gml_eval = gml->add_subcommand("eval", "evaluate a formula at a pointed graph");
    std::string gml_formula, gml_graph, gml_out;
    int gml_vertex = 0, gml_d = -1;
    gml_eval->add_option("--formula", gml_formula, "formula text or file")->required();
    gml_eval->add_option("--graph", gml_graph)->required();
    gml_eval->add_option("--vertex", gml_vertex);
    gml_eval->callback([&] {
        Formula f = formula_arg(gml_formula);
        FeaturedGraph g = load_graph_file(gml_graph);
        std::cout << (evaluate(f, g, gml_vertex) ? 1 : 0) << "\n";
    });

    auto* gml_compile = gml->add_subcommand("compile", "translate a formula into a network");
    gml_compile->add_option("--formula", gml_formula)->required();
    gml_compile->add_option("--d", gml_d, "input feature dimension (default: largest p index)");
    gml_compile->add_option("--out", gml_out, "network file (stdout otherwise)");
    gml_compile->callback([&] {
        Formula f = formula_arg(gml_formula);
        AcrGnn net = gml_d >= 0 ? compile(f, gml_d) : compile(f);
        if (gml_out.empty())
            std::cout << write_network(net);
        else
            save_network_file(net, gml_out);
    });

    // ---- bisim
    auto* bis = app.add_subcommand("bisim", "graded bisimilarity of two pointed graphs");
    std::string b_g1, b_g2, b_global = "none";
    int b_v1 = 0, b_v2 = 0, b_L = 1, b_c = 1;
    bis->add_option("--g1", b_g1)->required();
    bis->add_option("--v1", b_v1)->required();
    bis->add_option("--g2", b_g2)->required();
    bis->add_option("--v2", b_v2)->required();
    bis->add_option("--L", b_L)->required();
    bis->add_option("--c", b_c)->required();
    bis->add_option("--global", b_global, "none|exact|capped:q");
    bis->callback([&] {
        FeaturedGraph g1 = load_graph_file(b_g1), g2 = load_graph_file(b_g2);
        bool verdict = bisimilar(g1, b_v1, g2, b_v2, b_L, b_c, global_arg(b_global));
        std::cout << "bisimilar " << (verdict ? 1 : 0) << "\n";
        std::cout << types_to_text(graded_types({&g1, &g2}, b_L, b_c), {"g1", "g2"});
    });

    // ---- c2-game
    auto* c2 = app.add_subcommand("c2-game", "two-pebble counting equivalence");
    c2->add_option("--g1", b_g1)->required();
    c2->add_option("--v1", b_v1)->required();
    c2->add_option("--g2", b_g2)->required();
    c2->add_option("--v2", b_v2)->required();
    c2->add_option("--L", b_L)->required();
    c2->add_option("--c", b_c)->required();
    c2->callback([&] {
        FeaturedGraph g1 = load_graph_file(b_g1), g2 = load_graph_file(b_g2);
        C2Refinement r = c2_refine({&g1, &g2}, b_L, b_c);
        std::cout << "equivalent " << (r.same_class(0, b_v1, 1, b_v2) ? 1 : 0) << "\n";
        for (int k = 0; k <= b_L; ++k) {
            std::cout << "round " << k << ": g1=[";
            for (int v = 0; v < g1.n(); ++v) std::cout << (v ? " " : "") << r.round[k][v];
            std::cout << "] g2=[";
            for (int v = 0; v < g2.n(); ++v)
                std::cout << (v ? " " : "") << r.round[k][r.offset[1] + v];
            std::cout << "]\n";
        }
    });

    // ---- family
    auto* fam = app.add_subcommand("family", "appendix-C counterexample pair");
    int f_L = 1, f_c = 1;
    std::string f_outdir;
    fam->add_option("--L", f_L)->required();
    fam->add_option("--c", f_c)->required();
    fam->add_option("--outdir", f_outdir, "write G.fgr, H.fgr, report.txt here");
    fam->callback([&] {
        FamilyResult r = c2_counterexample_family(f_L, f_c);
        if (f_outdir.empty()) {
            std::cout << r.report.to_text();
        } else {
            std::filesystem::create_directories(f_outdir);
            save_graph_file(r.g, f_outdir + "/G.fgr");
            save_graph_file(r.h, f_outdir + "/H.fgr");
            std::ofstream rep(f_outdir + "/report.txt");
            rep << r.report.to_text();
            std::cout << "wrote " << f_outdir << "/{G.fgr,H.fgr,report.txt}\n";
        }
        if (!r.report.ok()) throw std::runtime_error("family report not all-green");
    });

    // ---- companion
    auto* comp = app.add_subcommand("companion", "appendix-D surgery and characteristic formulas");
    comp->require_subcommand(1);
    std::string cp_graph, cp_g2, cp_out;
    int cp_v = 0, cp_v2 = 0, cp_L = 1, cp_c = 1, cp_q = 1, cp_qprime = 1;

    auto add_common = [&](CLI::App* sub, bool pointed2) {
        sub->add_option("--graph", cp_graph)->required();
        sub->add_option("--v", cp_v);
        if (pointed2) {
            sub->add_option("--g2", cp_g2)->required();
            sub->add_option("--v2", cp_v2);
        }
        sub->add_option("--L", cp_L)->required();
        sub->add_option("--c", cp_c)->required();
        sub->add_option("--out", cp_out);
    };

    auto* cp_sat = comp->add_subcommand("saturate", "class-uniform companion graph");
    add_common(cp_sat, false);
    cp_sat->callback([&] {
        SurgeryReport rep;
        FeaturedGraph hat = saturate(load_graph_file(cp_graph), cp_v, cp_L, cp_c, &rep);
        emit_graph(hat, cp_out);
        std::cout << rep.to_text();
        if (!rep.all_ok()) throw std::runtime_error("saturation report not clean");
    });

    auto* cp_good = comp->add_subcommand("good", "initial good graph");
    add_common(cp_good, false);
    cp_good->callback([&] {
        SurgeryReport rep;
        FeaturedGraph star = initial_good_graph(load_graph_file(cp_graph), cp_v, cp_L, cp_c, &rep);
        emit_graph(star, cp_out);
        std::cout << rep.to_text();
        if (!rep.all_ok()) throw std::runtime_error("good-graph report not clean");
    });

    auto* cp_hom = comp->add_subcommand("homogenise", "companion of g2 mirrored on saturate(g1)");
    add_common(cp_hom, true);
    cp_hom->add_option("--qprime", cp_qprime)->required();
    cp_hom->callback([&] {
        FeaturedGraph g1 = load_graph_file(cp_graph), g2 = load_graph_file(cp_g2);
        FeaturedGraph hat1 = saturate(g1, cp_v, cp_L, cp_c);
        SurgeryReport rep;
        FeaturedGraph hat2 = homogenise(g1, cp_v, hat1, g2, cp_v2, cp_L, cp_c, cp_qprime, &rep);
        emit_graph(hat2, cp_out);
        std::cout << rep.to_text();
        if (!rep.all_ok()) throw std::runtime_error("homogenise report not clean");
    });

    auto* cp_chi = comp->add_subcommand("chi", "GML characteristic formula");
    add_common(cp_chi, false);
    cp_chi->callback([&] {
        Formula f = chi_formula(load_graph_file(cp_graph), cp_v, cp_L, cp_c);
        if (cp_out.empty())
            std::cout << print_formula(f) << "\n";
        else {
            std::ofstream o(cp_out);
            o << print_formula(f) << "\n";
        }
    });

    auto* cp_gamma = comp->add_subcommand("gamma", "GML-exists characteristic formula");
    add_common(cp_gamma, false);
    cp_gamma->add_option("--q", cp_q)->required();
    cp_gamma->callback([&] {
        Formula f = gamma_formula(load_graph_file(cp_graph), cp_v, cp_L, cp_c, cp_q);
        if (cp_out.empty())
            std::cout << print_formula(f) << "\n";
        else {
            std::ofstream o(cp_out);
            o << print_formula(f) << "\n";
        }
    });

    // ---- verify
    auto* ver = app.add_subcommand("verify", "run a verification suite (exit 0 iff clean)");
    std::string suite;
    int v_n = -1, v_L = 1, v_c = 1, v_cases = -1;
    ver->add_option("suite", suite,
                    "lemma32|appendixA|order-gnn|gadget-gnn|family|compiler|charformulas|"
                    "companion|invariance|games|all")
        ->required();
    ver->add_option("--n", v_n, "cap for lemma32 (exhaustive n) / appendixA");
    ver->add_option("--L", v_L, "family parameter");
    ver->add_option("--c", v_c, "family parameter");
    ver->add_option("--cases", v_cases, "case count for compiler/charformulas");
    ver->callback([&] {
        VerifyOptions opt;
        opt.seed = seed;
        opt.jobs = jobs;
        if (v_n > 0) {
            opt.lemma32_max_n = v_n;
            opt.appendix_a_max_n = std::min(v_n, 6);
        }
        if (v_cases > 0) {
            opt.compiler_cases = v_cases;
            opt.charformula_pairs = v_cases;
        }

        std::vector<SuiteResult> results;
        if (suite == "lemma32") results.push_back(verify_lemma32(opt));
        else if (suite == "appendixA") results.push_back(verify_appendix_a(opt));
        else if (suite == "order-gnn") results.push_back(verify_order_gnn(opt));
        else if (suite == "gadget-gnn") results.push_back(verify_gadget_gnn(opt));
        else if (suite == "family") results.push_back(verify_family(opt, v_L, v_c));
        else if (suite == "compiler") results.push_back(verify_compiler(opt));
        else if (suite == "charformulas") results.push_back(verify_charformulas(opt));
        else if (suite == "companion") results.push_back(verify_companion(opt));
        else if (suite == "invariance") results.push_back(verify_invariance(opt));
        else if (suite == "games") results.push_back(verify_refinement_games(opt));
        else if (suite == "all") results = verify_all(opt);
        else throw std::invalid_argument("unknown suite: " + suite);

        std::cout << format_results(results, format);
        for (auto& r : results)
            if (!r.ok()) throw std::runtime_error("suite " + r.name + " reported violations");
    });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
