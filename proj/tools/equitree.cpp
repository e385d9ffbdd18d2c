// Command-line surface: decide / color / verify / reduce / oracle / sweep.
// Exit codes: 0 ok-or-feasible, 1 infeasible-or-verification-failure,
// 2 usage/format/IO error, 3 oracle budget exhausted, 4 sweep disagreement.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "equitree/io.hpp"
#include "equitree/sweep.hpp"

namespace {

using namespace equitree;

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDisagreement = 4;

DegreeBound parse_bound_or_throw(const std::string& s) {
    const auto t = DegreeBound::parse(s);
    if (!t) throw CLI::ValidationError("--t", "expected a positive integer or 'inf'");
    return *t;
}

std::uint64_t default_node_budget() {
    const char* env = std::getenv("EQUITREE_NODE_BUDGET");
    if (!env) return kDefaultNodeBudget;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0)
        throw std::runtime_error("EQUITREE_NODE_BUDGET must be a positive integer");
    return value;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << bytes;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_dimacs(in);
}

ColoringFile load_coloring(const std::string& path) {
    const std::string bytes = read_file(path);
    const auto start = bytes.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && bytes[start] == '{')
        return coloring_from_json(nlohmann::ordered_json::parse(bytes));
    std::istringstream in(bytes);
    return read_coloring_text(in);
}

struct DecideArgs {
    int m = 0, n = 0, q = 1;
    std::string t_text;
    bool proper = false;
    bool with_coloring = false;
};

int run_decide(const DecideArgs& args) {
    Verdict verdict;
    DegreeBound file_t = DegreeBound::unbounded();
    if (args.proper) {
        verdict = decide_proper_equitable(args.m, args.n, args.q);
    } else {
        file_t = parse_bound_or_throw(args.t_text);
        verdict = decide_equitable_tree(args.m, args.n, args.q, file_t);
    }
    std::cout << certificate_json(verdict, file_t, args.with_coloring).dump() << "\n";
    return verdict.feasible ? kExitFeasible : kExitInfeasible;
}

struct ColorArgs {
    int m = 0, n = 0, q = 1;
    std::string t_text;
    bool proper = false;
    bool json = false;
    std::string out = "-";
    std::string graph_out;
};

int run_color(const ColorArgs& args) {
    Verdict verdict;
    DegreeBound file_t = DegreeBound::unbounded();
    if (args.proper) {
        verdict = decide_proper_equitable(args.m, args.n, args.q);
    } else {
        file_t = parse_bound_or_throw(args.t_text);
        verdict = decide_equitable_tree(args.m, args.n, args.q, file_t);
    }
    if (!verdict.feasible) {
        std::cout << "INFEASIBLE\n";
        return kExitInfeasible;
    }
    const ColoringFile file{*verdict.coloring, file_t};
    const std::string bytes =
        args.json ? coloring_to_json(file).dump() + "\n" : write_coloring_text(file);
    if (args.out == "-")
        std::cout << bytes;
    else
        write_file(args.out, bytes);
    if (!args.graph_out.empty())
        write_file(args.graph_out,
                   write_dimacs(complete_bipartite(args.m, args.n).graph));
    return kExitFeasible;
}

struct VerifyArgs {
    std::string graph_path;
    int m = -1, n = -1;
    std::string coloring_path;
    std::string t_override;
    bool proper = false;
    bool no_equitable = false;
};

int run_verify(const VerifyArgs& args) {
    std::optional<Graph> graph;
    if (!args.graph_path.empty())
        graph = load_graph(args.graph_path);
    else if (args.m >= 0 && args.n >= 0)
        graph = complete_bipartite(args.m, args.n).graph;
    else
        throw std::runtime_error("verify needs --graph or both --m and --n");

    const ColoringFile file = load_coloring(args.coloring_path);
    const DegreeBound t =
        args.t_override.empty() ? file.t : parse_bound_or_throw(args.t_override);

    const auto report = verify_tree_coloring(*graph, file.coloring, t);
    if (!report.ok) {
        std::cout << "FAIL " << report.message() << "\n";
        return kExitInfeasible;
    }
    if (args.proper && !is_proper(*graph, file.coloring)) {
        std::cout << "FAIL not a proper coloring\n";
        return kExitInfeasible;
    }
    if (!args.no_equitable && !is_equitable(file.coloring)) {
        std::cout << "FAIL not equitable\n";
        return kExitInfeasible;
    }
    std::cout << "OK\n";
    return kExitFeasible;
}

struct ReduceArgs {
    std::string kind;
    std::string in;
    int q = 1;
    int t = 0;
    std::string out;
    std::string sidecar;
};

int run_reduce(const ReduceArgs& args) {
    const Graph g = load_graph(args.in);
    GadgetOutput gadget{complete(1), {}, {}};
    GadgetKind kind;
    std::optional<int> t;
    if (args.kind == "npt") {
        if (args.t < 1) throw std::runtime_error("reduce npt needs --t >= 1");
        kind = GadgetKind::npt;
        t = args.t;
        gadget = gadget_npt(g, args.q, args.t);
    } else if (args.kind == "npi") {
        kind = GadgetKind::npi;
        gadget = gadget_npi(g, args.q);
    } else {
        kind = GadgetKind::pad;
        gadget = pad_equitable(g, args.q);
    }
    write_file(args.out, write_dimacs(gadget.graph));
    const std::string sidecar_path =
        args.sidecar.empty() ? args.out + ".json" : args.sidecar;
    write_file(sidecar_path,
               gadget_sidecar_json(gadget, kind, args.q, t).dump(2) + "\n");
    return kExitFeasible;
}

struct OracleArgs {
    std::string graph_path;
    int q = 1;
    std::string t_text = "inf";
    bool equitable = false;
    bool proper = false;
    std::uint64_t budget = 0;
    std::string out = "-";
};

int run_oracle(const OracleArgs& args) {
    const Graph g = load_graph(args.graph_path);
    const std::uint64_t budget = args.budget ? args.budget : default_node_budget();
    SearchResult result;
    DegreeBound file_t = DegreeBound::unbounded();
    if (args.proper) {
        result = args.equitable ? oracle_proper_equitable(g, args.q, budget)
                                : oracle_proper(g, args.q, budget);
    } else {
        SearchConfig cfg;
        cfg.node_budget = budget;
        cfg.equitable = args.equitable;
        cfg.t = parse_bound_or_throw(args.t_text);
        file_t = cfg.t;
        result = oracle_tree(g, args.q, cfg);
    }
    if (result.status == SearchStatus::budget_exhausted) {
        std::cout << "BUDGET\n";
        return kExitBudget;
    }
    if (result.status == SearchStatus::unsat) {
        std::cout << "UNSAT\n";
        return kExitInfeasible;
    }
    const std::string bytes =
        write_coloring_text(ColoringFile{*result.coloring, file_t});
    if (args.out == "-")
        std::cout << bytes;
    else
        write_file(args.out, bytes);
    return kExitFeasible;
}

struct SweepArgs {
    int max_sum = 6;
    int max_q = 3;
    std::string t_list = "inf";
    int oracle_limit = 12;
    int jobs = 1;
    std::uint64_t budget = 0;
    bool keep_disagreements = false;
};

int run_sweep_cmd(const SweepArgs& args) {
    SweepOptions options;
    options.max_sum = args.max_sum;
    options.max_q = args.max_q;
    options.oracle_limit = args.oracle_limit;
    options.jobs = args.jobs;
    options.node_budget = args.budget ? args.budget : default_node_budget();
    std::stringstream list(args.t_list);
    std::string item;
    while (std::getline(list, item, ','))
        options.t_list.push_back(parse_bound_or_throw(item));

    const auto rows = run_sweep(options);
    const bool all_agree =
        std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.agree; });
    if (all_agree) {
        std::cout << sweep_csv(rows);
        return kExitFeasible;
    }
    if (args.keep_disagreements) {
        std::cout << sweep_csv(rows);
        std::cerr << "sweep: disagreements found\n";
        return kExitDisagreement;
    }
    for (const auto& row : rows) {
        if (!row.agree) {
            std::cerr << "sweep: disagreement at m=" << row.m << " n=" << row.n
                      << " q=" << row.q << " t=" << row.t.str()
                      << " (rerun with --keep-disagreements for the full table)\n";
            break;
        }
    }
    return kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equitable tree-coloring toolkit for complete bipartite graphs"};
    app.require_subcommand(1);

    DecideArgs decide_args;
    auto* decide = app.add_subcommand(
        "decide", "decide equitable (q,t)-tree / proper equitable colorability of K_{m,n}");
    decide->add_option("--m", decide_args.m, "size of side X")->required();
    decide->add_option("--n", decide_args.n, "size of side Y")->required();
    decide->add_option("--q", decide_args.q, "number of color classes")->required();
    auto* decide_t = decide->add_option("--t", decide_args.t_text,
                                        "degree bound (positive integer or 'inf')");
    auto* decide_proper =
        decide->add_flag("--proper", decide_args.proper, "decide proper equitable instead");
    decide->add_flag("--coloring", decide_args.with_coloring,
                     "embed the witness coloring in the certificate");
    decide_t->excludes(decide_proper);

    ColorArgs color_args;
    auto* color = app.add_subcommand("color", "emit a witness coloring for K_{m,n}");
    color->add_option("--m", color_args.m)->required();
    color->add_option("--n", color_args.n)->required();
    color->add_option("--q", color_args.q)->required();
    auto* color_t = color->add_option("--t", color_args.t_text);
    auto* color_proper = color->add_flag("--proper", color_args.proper);
    color->add_flag("--json", color_args.json, "emit the JSON coloring form");
    color->add_option("--out", color_args.out, "output path ('-' for stdout)");
    color->add_option("--graph-out", color_args.graph_out,
                      "also write K_{m,n} in graph format");
    color_t->excludes(color_proper);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "verify a coloring file against a graph");
    verify->add_option("--graph", verify_args.graph_path, "graph file");
    verify->add_option("--m", verify_args.m, "build K_{m,n} instead of --graph");
    verify->add_option("--n", verify_args.n);
    verify->add_option("--coloring", verify_args.coloring_path, "coloring file (text or JSON)")
        ->required();
    verify->add_option("--t", verify_args.t_override, "override the file's degree bound");
    verify->add_flag("--proper", verify_args.proper, "additionally require properness");
    verify->add_flag("--no-equitable", verify_args.no_equitable,
                     "skip the equitability check");

    ReduceArgs reduce_args;
    auto* reduce = app.add_subcommand("reduce", "emit a reduction gadget");
    reduce->add_option("kind", reduce_args.kind, "gadget kind")
        ->required()
        ->check(CLI::IsMember({"npt", "npi", "pad"}));
    reduce->add_option("--in", reduce_args.in, "source graph file")->required();
    reduce->add_option("--q", reduce_args.q)->required();
    reduce->add_option("--t", reduce_args.t, "degree bound (npt only)");
    reduce->add_option("--out", reduce_args.out, "gadget graph file")->required();
    reduce->add_option("--sidecar", reduce_args.sidecar,
                       "region sidecar path (default <out>.json)");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "run the exhaustive oracle on a graph file");
    oracle->add_option("--graph", oracle_args.graph_path)->required();
    oracle->add_option("--q", oracle_args.q)->required();
    oracle->add_option("--t", oracle_args.t_text, "degree bound (default inf)");
    oracle->add_flag("--equitable", oracle_args.equitable);
    oracle->add_flag("--proper", oracle_args.proper, "proper colorability instead of tree");
    oracle->add_option("--budget", oracle_args.budget, "node budget override");
    oracle->add_option("--out", oracle_args.out, "coloring output ('-' for stdout)");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "agreement sweep over a parameter grid");
    sweep->add_option("--max-sum", sweep_args.max_sum, "bound on m+n")->required();
    sweep->add_option("--max-q", sweep_args.max_q)->required();
    sweep->add_option("--t-list", sweep_args.t_list, "comma-separated list, e.g. 1,2,inf")
        ->required();
    sweep->add_option("--oracle-limit", sweep_args.oracle_limit,
                      "skip the oracle column above this vertex count");
    sweep->add_option("--jobs", sweep_args.jobs, "worker threads");
    sweep->add_option("--budget", sweep_args.budget, "node budget override");
    sweep->add_flag("--keep-disagreements", sweep_args.keep_disagreements,
                    "emit disagreeing rows instead of aborting");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(decide)) {
            if (!decide_args.proper && decide_args.t_text.empty())
                throw CLI::RequiredError("--t or --proper");
            return run_decide(decide_args);
        }
        if (app.got_subcommand(color)) {
            if (!color_args.proper && color_args.t_text.empty())
                throw CLI::RequiredError("--t or --proper");
            return run_color(color_args);
        }
        if (app.got_subcommand(verify)) return run_verify(verify_args);
        if (app.got_subcommand(reduce)) return run_reduce(reduce_args);
        if (app.got_subcommand(oracle)) return run_oracle(oracle_args);
        if (app.got_subcommand(sweep)) return run_sweep_cmd(sweep_args);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
