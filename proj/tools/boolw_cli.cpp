#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "boolw/bounds.hpp"
#include "boolw/cut.hpp"
#include "boolw/decomposition.hpp"
#include "boolw/errors.hpp"
#include "boolw/generators.hpp"
#include "boolw/graph.hpp"
#include "boolw/oracles.hpp"
#include "boolw/partition_dp.hpp"
#include "boolw/set_spec.hpp"
#include "boolw/subset_dp.hpp"

using namespace boolw;

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

uint64_t env_cap(const char* name, uint64_t fallback) {
    const char* s = std::getenv(name);
    if (!s || !*s) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (*end) throw InputError(std::string(name) + " is not a number");
    return v;
}

Graph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    return load_graph(in);
}

DecompositionTree read_tree(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open tree file '" + path + "'");
    return load_tree(in, g);
}

// "1,3,5" (1-indexed) -> VertexSet
VertexSet parse_vertices(const std::string& text, int n) {
    VertexSet a(n);
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw InputError("bad vertex token '" + tok + "'");
        }
        if (pos != tok.size() || v < 1 || v > n)
            throw InputError("vertex '" + tok + "' out of range 1.." + std::to_string(n));
        a.insert(v - 1);
    }
    if (a.count() == 0) throw InputError("empty vertex list");
    return a;
}

std::string join_1indexed(const VertexSet& a) {
    std::string s;
    a.for_each([&](int v) {
        if (!s.empty()) s += ',';
        s += std::to_string(v + 1);
    });
    return s;
}

CutFunction parse_function(const std::string& name) {
    if (name == "boolean") return CutFunction::Boolean;
    if (name == "rank") return CutFunction::Rank;
    throw InputError("unknown cut function '" + name + "' (boolean|rank)");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
}

struct GenArgs {
    std::string family;
    int k = 0, p = 0, q = 0, n = 0, n1 = 0, n2 = 0;
    double prob = -1.0;
    uint64_t seed = 0;
    bool has_seed = false;
    std::string output;
};

int run_gen(const GenArgs& a) {
    Graph g;
    std::string cut_comment;
    if (a.family == "hsu") {
        auto gg = gen_hsu(a.k);
        g = gg.graph;
        cut_comment = join_1indexed(*gg.canonical_cut);
    } else if (a.family == "rk") {
        auto gg = gen_rk(a.k);
        g = gg.graph;
        cut_comment = join_1indexed(*gg.canonical_cut);
    } else if (a.family == "hsu-grid") {
        g = gen_hsu_grid(a.p, a.q);
    } else if (a.family == "grid") {
        g = gen_grid(a.p, a.q);
    } else if (a.family == "path") {
        g = gen_path(a.n);
    } else if (a.family == "cycle") {
        g = gen_cycle(a.n);
    } else if (a.family == "complete") {
        g = gen_complete(a.n);
    } else if (a.family == "complete-bipartite") {
        auto gg = gen_complete_bipartite(a.n1, a.n2);
        g = gg.graph;
        cut_comment = join_1indexed(*gg.canonical_cut);
    } else if (a.family == "random") {
        if (!a.has_seed) throw InputError("gen random requires --seed");
        if (a.prob < 0.0 || a.prob > 1.0) throw InputError("gen random requires --prob in [0,1]");
        g = gen_random(a.n, a.prob, a.seed);
    } else {
        throw InputError("unknown family '" + a.family + "'");
    }
    std::ostringstream out;
    if (!cut_comment.empty()) out << "# cut " << cut_comment << "\n";
    save_graph(g, out);
    write_output(a.output, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boolean-width / rank-width toolkit"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker cap (currently single-threaded)");

    // gen
    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a graph family");
    gen->add_option("family", gen_args.family,
                    "hsu|rk|hsu-grid|grid|path|cycle|complete|complete-bipartite|random")
        ->required();
    gen->add_option("--k", gen_args.k);
    gen->add_option("--p", gen_args.p);
    gen->add_option("--q", gen_args.q);
    gen->add_option("--n", gen_args.n);
    gen->add_option("--n1", gen_args.n1);
    gen->add_option("--n2", gen_args.n2);
    gen->add_option("--prob", gen_args.prob);
    auto* gen_seed = gen->add_option("--seed", gen_args.seed);
    gen->add_option("-o,--output", gen_args.output);

    // cut
    std::string cut_graph, cut_vertices;
    bool cut_nss = false;
    std::vector<int> cut_class_ds;
    auto* cut = app.add_subcommand("cut", "evaluate a single cut");
    cut->add_option("--graph", cut_graph)->required();
    cut->add_option("--vertices", cut_vertices, "comma-separated 1-indexed A-side")->required();
    cut->add_flag("--nss", cut_nss);
    cut->add_option("--classes", cut_class_ds, "d values for class counts");

    // width
    std::string w_graph, w_tree, w_function = "boolean";
    auto* width = app.add_subcommand("width", "f-width of a tree");
    width->add_option("--graph", w_graph)->required();
    width->add_option("--tree", w_tree)->required();
    width->add_option("--function", w_function);

    // decompose
    std::string d_graph, d_method, d_function = "boolean", d_output;
    int d_p = 0, d_q = 0;
    uint64_t d_seed = 0;
    auto* dec = app.add_subcommand("decompose", "build a decomposition tree");
    dec->add_option("--graph", d_graph)->required();
    dec->add_option("--method", d_method, "exact|greedy|hsu-vertical|hsu-horizontal|random")
        ->required();
    dec->add_option("--function", d_function);
    dec->add_option("--p", d_p);
    dec->add_option("--q", d_q);
    auto* dec_seed = dec->add_option("--seed", d_seed);
    dec->add_option("-o,--output", d_output);

    // solve subset / solve partition
    auto* solve = app.add_subcommand("solve", "run a dynamic program");
    solve->require_subcommand(1);
    std::string ss_graph, ss_tree, ss_problem, ss_sigma, ss_rho, ss_objective;
    int ss_k = 0;
    auto* ss = solve->add_subcommand("subset", "(sigma,rho) optimization");
    ss->add_option("--graph", ss_graph)->required();
    ss->add_option("--tree", ss_tree)->required();
    ss->add_option("--problem", ss_problem);
    ss->add_option("--k", ss_k);
    ss->add_option("--sigma", ss_sigma);
    ss->add_option("--rho", ss_rho);
    ss->add_option("--objective", ss_objective, "min|max");

    std::string sp_graph, sp_tree, sp_problem, sp_matrix, sp_extremal;
    int sp_q = 0;
    bool sp_strict = false;
    auto* sp = solve->add_subcommand("partition", "D_q feasibility");
    sp->add_option("--graph", sp_graph)->required();
    sp->add_option("--tree", sp_tree)->required();
    sp->add_option("--problem", sp_problem, "q-coloring");
    sp->add_option("--q", sp_q);
    sp->add_option("--matrix", sp_matrix);
    sp->add_flag("--strict", sp_strict, "full cartesian tuple products");
    sp->add_option("--extremal", sp_extremal, "min|max over |V_1|");

    // verify
    auto* verify = app.add_subcommand("verify", "main vs oracle");
    verify->require_subcommand(1);
    std::string vs_graph, vs_tree, vs_problem;
    int vs_k = 0;
    auto* vs = verify->add_subcommand("subset");
    vs->add_option("--graph", vs_graph)->required();
    vs->add_option("--tree", vs_tree)->required();
    vs->add_option("--problem", vs_problem)->required();
    vs->add_option("--k", vs_k);
    std::string vp_graph, vp_tree, vp_matrix;
    int vp_q = 0;
    auto* vp = verify->add_subcommand("partition");
    vp->add_option("--graph", vp_graph)->required();
    vp->add_option("--tree", vp_tree)->required();
    vp->add_option("--q", vp_q, "q for q-coloring");
    vp->add_option("--matrix", vp_matrix);
    std::string vc_graph, vc_vertices;
    auto* vc = verify->add_subcommand("cut");
    vc->add_option("--graph", vc_graph)->required();
    vc->add_option("--vertices", vc_vertices)->required();
    std::string vw_graph, vw_function = "boolean";
    auto* vw = verify->add_subcommand("width");
    vw->add_option("--graph", vw_graph)->required();
    vw->add_option("--function", vw_function);

    // bounds
    std::string b_graph;
    bool b_exact = false;
    int b_cuts = 20;
    uint64_t b_seed = 0;
    auto* bounds = app.add_subcommand("bounds", "width-comparison report");
    bounds->add_option("--graph", b_graph)->required();
    bounds->add_flag("--exact", b_exact);
    bounds->add_option("--cuts", b_cuts);
    bounds->add_option("--seed", b_seed)->required();

    CLI11_PARSE(app, argc, argv);
    gen_args.has_seed = gen_seed->count() > 0;

    try {
        uint64_t class_cap = env_cap("BOOLW_CLASS_CAP", uint64_t(1) << 20);
        uint64_t tuple_cap = env_cap("BOOLW_TUPLE_CAP", uint64_t(1) << 20);

        if (*gen) return run_gen(gen_args);

        if (*cut) {
            Graph g = read_graph(cut_graph);
            VertexSet a = parse_vertices(cut_vertices, g.n());
            CutReport r = cut_report(g, a, cut_nss, cut_class_ds);
            std::cout << "closure_count=" << r.closure_count << "\n"
                      << "beta=" << fmt(r.beta) << "\n"
                      << "rank=" << r.rank << "\n";
            if (r.nss) std::cout << "nss=" << *r.nss << "\n";
            for (const auto& [d, c] : r.d_class_counts)
                std::cout << "classes_d" << d << "=" << c << "\n";
            return 0;
        }

        if (*width) {
            Graph g = read_graph(w_graph);
            DecompositionTree t = read_tree(w_tree, g);
            CutFunction f = parse_function(w_function);
            WidthResult r = f_width(g, t, f);
            std::cout << "width=" << r.value << "\n";
            if (f == CutFunction::Boolean) std::cout << "beta=" << fmt(std::log2(double(r.value))) << "\n";
            std::cout << "argmax_edge=" << r.argmax_edge << "\n";
            return 0;
        }

        if (*dec) {
            Graph g = read_graph(d_graph);
            CutFunction f = parse_function(d_function);
            DecompositionTree t;
            bool heuristic = false;
            if (d_method == "exact") {
                t = exact_min_width(g, f).first;
            } else if (d_method == "greedy") {
                if (dec_seed->count() == 0) throw InputError("decompose greedy requires --seed");
                t = greedy_decompose(g, f, d_seed);
                heuristic = true;
            } else if (d_method == "hsu-vertical" || d_method == "hsu-horizontal") {
                if (d_p < 3 || d_q < 3) throw InputError("hsu methods require --p and --q >= 3");
                if (d_p * d_q != g.n()) throw InputError("--p * --q must equal n");
                t = structured_grid_tree(d_p, d_q,
                                         d_method == "hsu-vertical" ? Orientation::Vertical
                                                                    : Orientation::Horizontal);
            } else if (d_method == "random") {
                if (dec_seed->count() == 0) throw InputError("decompose random requires --seed");
                t = random_tree(g, d_seed);
            } else {
                throw InputError("unknown method '" + d_method + "'");
            }
            t.validate(g);
            WidthResult r = f_width(g, t, f);
            std::cout << "method=" << d_method << "\n"
                      << "function=" << d_function << "\n"
                      << "heuristic=" << (heuristic ? "true" : "false") << "\n"
                      << "width=" << r.value << "\n";
            if (f == CutFunction::Boolean) std::cout << "beta=" << fmt(std::log2(double(r.value))) << "\n";
            std::ostringstream out;
            save_tree(t, out);
            if (d_output.empty()) d_output = "-";
            if (d_output != "-") write_output(d_output, out.str());
            else std::cout << out.str();
            return 0;
        }

        if (*ss) {
            Graph g = read_graph(ss_graph);
            DecompositionTree t = read_tree(ss_tree, g);
            SubsetProblem prob;
            if (!ss_problem.empty()) {
                prob = subset_catalog(ss_problem, ss_k);
                std::cout << "problem=" << ss_problem << "\n";
            } else {
                if (ss_sigma.empty() || ss_rho.empty() || ss_objective.empty())
                    throw InputError("need --problem or all of --sigma --rho --objective");
                prob.sigma = SetSpec::parse(ss_sigma);
                prob.rho = SetSpec::parse(ss_rho);
                if (ss_objective == "min") prob.objective = Objective::Min;
                else if (ss_objective == "max") prob.objective = Objective::Max;
                else throw InputError("--objective must be min|max");
            }
            std::cout << "sigma=" << prob.sigma.to_string() << "\n"
                      << "rho=" << prob.rho.to_string() << "\n"
                      << "objective=" << (prob.objective == Objective::Min ? "min" : "max") << "\n"
                      << "d=" << prob.d() << "\n";
            WidthResult wr = f_width(g, t, CutFunction::Boolean);
            std::cout << "width=" << wr.value << "\n"
                      << "beta=" << fmt(std::log2(double(wr.value))) << "\n";
            auto value = solve_subset(g, t, prob, class_cap);
            if (value) std::cout << "value=" << *value << "\n";
            else std::cout << "value=INFEASIBLE\n";
            return 0;
        }

        if (*sp) {
            Graph g = read_graph(sp_graph);
            DecompositionTree t = read_tree(sp_tree, g);
            DegreeMatrix m;
            if (!sp_problem.empty()) {
                if (sp_problem != "q-coloring") throw InputError("unknown partition problem");
                if (sp_q < 1) throw InputError("q-coloring requires --q >= 1");
                m = q_coloring_matrix(sp_q);
            } else if (!sp_matrix.empty()) {
                std::ifstream in(sp_matrix);
                if (!in) throw InputError("cannot open matrix file '" + sp_matrix + "'");
                m = load_matrix(in);
            } else {
                throw InputError("need --problem or --matrix");
            }
            PartitionOptions opts;
            opts.class_cap = class_cap;
            opts.tuple_cap = tuple_cap;
            opts.strict_tuples = sp_strict;
            std::cout << "q=" << m.q << "\n"
                      << "d=" << m.d() << "\n";
            if (!sp_extremal.empty()) {
                Objective obj;
                if (sp_extremal == "min") obj = Objective::Min;
                else if (sp_extremal == "max") obj = Objective::Max;
                else throw InputError("--extremal must be min|max");
                auto v = solve_partition_extremal(g, t, m, obj, opts);
                if (v) std::cout << "value=" << *v << "\n";
                else std::cout << "value=INFEASIBLE\n";
            } else {
                bool ok = solve_partition(g, t, m, opts);
                std::cout << "feasible=" << (ok ? "true" : "false") << "\n";
            }
            return 0;
        }

        if (*vs) {
            Graph g = read_graph(vs_graph);
            DecompositionTree t = read_tree(vs_tree, g);
            SubsetProblem prob = subset_catalog(vs_problem, vs_k);
            auto main_v = solve_subset(g, t, prob, class_cap);
            auto oracle_v = brute_subset_opt(g, prob);
            auto show = [](const std::optional<long>& v) {
                return v ? std::to_string(*v) : std::string("INFEASIBLE");
            };
            std::cout << "main=" << show(main_v) << "\n"
                      << "oracle=" << show(oracle_v) << "\n"
                      << "agree=" << (main_v == oracle_v ? "true" : "false") << "\n";
            return main_v == oracle_v ? 0 : 1;
        }

        if (*vp) {
            Graph g = read_graph(vp_graph);
            DecompositionTree t = read_tree(vp_tree, g);
            DegreeMatrix m;
            if (vp_q >= 1) m = q_coloring_matrix(vp_q);
            else if (!vp_matrix.empty()) {
                std::ifstream in(vp_matrix);
                if (!in) throw InputError("cannot open matrix file '" + vp_matrix + "'");
                m = load_matrix(in);
            } else throw InputError("need --q or --matrix");
            PartitionOptions opts;
            opts.class_cap = class_cap;
            opts.tuple_cap = tuple_cap;
            bool main_v = solve_partition(g, t, m, opts);
            bool oracle_v = brute_partition_exists(g, m);
            std::cout << "main=" << (main_v ? "true" : "false") << "\n"
                      << "oracle=" << (oracle_v ? "true" : "false") << "\n"
                      << "agree=" << (main_v == oracle_v ? "true" : "false") << "\n";
            return main_v == oracle_v ? 0 : 1;
        }

        if (*vc) {
            Graph g = read_graph(vc_graph);
            VertexSet a = parse_vertices(vc_vertices, g.n());
            CutReport main_r = cut_report(g, a, a.count() <= 12);
            BruteCut oracle_r = brute_cut(g, a);
            bool agree = main_r.closure_count == oracle_r.closure_count &&
                         main_r.rank == oracle_r.rank && main_r.nss == oracle_r.nss;
            std::cout << "main_closure=" << main_r.closure_count << "\n"
                      << "oracle_closure=" << oracle_r.closure_count << "\n"
                      << "main_rank=" << main_r.rank << "\n"
                      << "oracle_rank=" << oracle_r.rank << "\n";
            if (main_r.nss) std::cout << "main_nss=" << *main_r.nss << "\n";
            if (oracle_r.nss) std::cout << "oracle_nss=" << *oracle_r.nss << "\n";
            std::cout << "agree=" << (agree ? "true" : "false") << "\n";
            return agree ? 0 : 1;
        }

        if (*vw) {
            Graph g = read_graph(vw_graph);
            CutFunction f = parse_function(vw_function);
            uint64_t main_v = exact_min_width(g, f).second;
            uint64_t oracle_v = brute_optimal_width(g, f);
            std::cout << "main=" << main_v << "\n"
                      << "oracle=" << oracle_v << "\n"
                      << "agree=" << (main_v == oracle_v ? "true" : "false") << "\n";
            return main_v == oracle_v ? 0 : 1;
        }

        if (*bounds) {
            Graph g = read_graph(b_graph);
            BoundsReport r = bounds_report(g, b_exact, b_cuts, b_seed);
            std::cout << "mode=" << (r.exact ? "exact" : "heuristic") << "\n"
                      << "rank_width=" << r.rank_width << "\n"
                      << "boolean_width_closure=" << r.boolean_width_closure << "\n"
                      << "boolean_width=" << fmt(r.boolean_width) << "\n"
                      << "log2_rank_width=" << fmt(r.log2_rank_width) << "\n"
                      << "upper=" << fmt(r.upper) << "\n"
                      << "chain=" << (r.chain_ok ? "pass" : "fail") << "\n";
            if (r.rank_zero) std::cout << "# rank 0: no edges, chain degenerates to 0 <= 0\n";
            std::cout << "cuts=" << r.cuts.size() << "\n";
            for (size_t i = 0; i < r.cuts.size(); ++i) {
                const auto& c = r.cuts[i];
                std::cout << "cut" << i << "_vertices=" << join_1indexed(c.a) << "\n"
                          << "cut" << i << "_closure=" << c.closure_count << "\n"
                          << "cut" << i << "_rank=" << c.rank << "\n";
                if (c.nss) std::cout << "cut" << i << "_nss=" << *c.nss << "\n";
                std::cout << "cut" << i << "_chain=" << (c.chain_ok ? "pass" : "fail") << "\n"
                          << "cut" << i << "_tail=" << (c.tail_ok ? "pass" : "fail") << "\n";
            }
            return 0;
        }
    } catch (const RefusalError& e) {
        std::cerr << "refused=" << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error=" << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error=" << e.what() << "\n";
        return 1;
    }
    return 0;
}
