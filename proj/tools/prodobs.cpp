// prodobs: structural observability analysis of directed networks and their
// Cartesian products.
//
// Exit codes: 0 success / observable, 3 unobservable verdict, 2 bad input,
// 1 internal or numeric failure.

#include "prodobs/error.hpp"
#include "prodobs/graph_io.hpp"
#include "prodobs/numeric.hpp"
#include "prodobs/observability.hpp"
#include "prodobs/product.hpp"
#include "prodobs/report.hpp"
#include "prodobs/structure.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>

using namespace prodobs;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnobservable = 3;

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    out << text;
}

std::vector<std::string> split_labels(const std::string& list)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        auto end = list.find(',', start);
        if (end == std::string::npos)
            end = list.size();
        auto item = list.substr(start, end - start);
        auto first = item.find_first_not_of(" \t");
        auto last = item.find_last_not_of(" \t");
        if (first != std::string::npos)
            out.push_back(item.substr(first, last - first + 1));
        start = end + 1;
    }
    return out;
}

// Explicit --observers if given, otherwise the planned set.
std::vector<NodeIndex> observers_for(const DiGraph& g, const std::optional<std::string>& flag)
{
    if (flag)
        return resolve_observers(g, split_labels(*flag));
    return plan_observers(g).observers;
}

void print_json(const nlohmann::json& j)
{
    std::cout << j.dump(2) << '\n';
}

int cmd_analyze(const std::string& path, const std::string& format)
{
    auto g = read_graph_file(path);
    auto report = analyze(g);
    if (format == "table")
        std::cout << to_table(g, report);
    else
        print_json(to_json(g, report));
    return kExitOk;
}

int cmd_product(const std::string& left, const std::string& right, const std::string& out,
                const std::string& dot)
{
    auto g1 = read_graph_file(left);
    auto g2 = read_graph_file(right);
    auto p = cartesian_product(g1, g2);
    auto doc = graph_to_json(p.graph).dump(2) + "\n";
    if (out.empty())
        std::cout << doc;
    else
        write_file(out, doc);

    if (!dot.empty()) {
        DotStyle style;
        style.graph_name = "product";
        style.highlighted.assign(p.graph.size(), false);
        const auto& g = p.graph;
        for (NodeIndex v = 0; v < g.size(); ++v)
            style.node_attributes.push_back({{"factor1", g1.label(p.left_of[v])},
                                             {"factor2", g2.label(p.right_of[v])}});
        auto parents = classify_parents(g, scc_decompose(g));
        for (const auto& c : parents.parent_sccs)
            for (auto v : c)
                style.highlighted[v] = true;
        write_file(dot, graph_to_dot(g, style));
    }
    return kExitOk;
}

int cmd_observers(const std::string& path)
{
    auto g = read_graph_file(path);
    print_json(to_json(g, plan_observers(g)));
    return kExitOk;
}

int cmd_check(const std::string& path, const std::optional<std::string>& observers)
{
    auto g = read_graph_file(path);
    auto obs = observers_for(g, observers);
    auto verdict = check_observable(g, obs);
    print_json(to_json(g, obs, verdict));
    return verdict.observable() ? kExitOk : kExitUnobservable;
}

int cmd_verify_product(const std::string& left, const std::string& right)
{
    auto report = verify_product_recovery(read_graph_file(left), read_graph_file(right));
    print_json(to_json(report));
    return report.recovered ? kExitOk : kExitUnobservable;
}

int cmd_numeric_check(const std::string& path, const std::optional<std::string>& observers,
                      std::vector<std::uint64_t> seeds, double tol)
{
    auto g = read_graph_file(path);
    auto obs = observers_for(g, observers);
    if (seeds.empty()) {
        seeds.resize(10);
        std::iota(seeds.begin(), seeds.end(), 1);
    }
    auto report = cross_validate(g, obs, seeds, tol);
    std::vector<RankResult> ranks;
    for (auto seed : seeds) {
        try {
            ranks.push_back(observability_rank(realize_weights(g, obs, seed, false), tol));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NumericOverflow)
                throw;
            ranks.push_back({report.entries[ranks.size()].numeric_rank, std::numeric_limits<double>::infinity()});
        }
    }
    auto j = to_json(g, report, ranks);
    j["observers"] = labels_of(g, obs);
    print_json(j);
    return report.structural_observable ? kExitOk : kExitUnobservable;
}

struct SimulateFlags {
    std::optional<std::string> observers;
    std::uint64_t seed = 1;
    EstimationOptions options;
    std::string csv;
};

int cmd_simulate(const std::string& path, const SimulateFlags& f)
{
    auto g = read_graph_file(path);
    auto obs = observers_for(g, f.observers);
    auto verdict = check_observable(g, obs);
    if (!verdict.observable()) {
        print_json(to_json(g, obs, verdict));
        return kExitUnobservable;
    }
    auto realization = realize_weights(g, obs, f.seed, true);
    auto trace = simulate_estimation(realization, f.options);
    if (!f.csv.empty())
        write_file(f.csv, trace_to_csv(trace));
    auto j = to_json(trace, realization);
    j["observers"] = labels_of(g, obs);
    print_json(j);
    return kExitOk;
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotNumericallyObservable:
        return kExitUnobservable;
    case ErrorCode::NumericOverflow:
    case ErrorCode::DivergedEstimate:
    case ErrorCode::NotAPermutation:
    case ErrorCode::SizeMismatch:
        return kExitInternal;
    default:
        return kExitInput;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Structural observability of directed networks and Cartesian products"};
    app.require_subcommand(1);

    std::string file, file2, format = "json", out, dot;
    std::optional<std::string> observers;

    auto* analyze_cmd = app.add_subcommand("analyze", "SCCs, parents, matching and observer plan");
    analyze_cmd->add_option("graph", file, "graph file (JSON or edge list)")->required();
    analyze_cmd->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

    auto* product_cmd = app.add_subcommand("product", "Cartesian product of two graphs");
    product_cmd->add_option("left", file, "first factor")->required();
    product_cmd->add_option("right", file2, "second factor")->required();
    product_cmd->add_option("-o,--output", out, "write product JSON here instead of stdout");
    product_cmd->add_option("--dot", dot, "also write a Graphviz DOT file");

    auto* observers_cmd = app.add_subcommand("observers", "minimal observer placement");
    observers_cmd->add_option("graph", file, "graph file")->required();

    auto* check_cmd = app.add_subcommand("check", "structural observability of an observer set");
    check_cmd->add_option("graph", file, "graph file")->required();
    check_cmd->add_option("--observers", observers, "comma-separated node labels (default: planned set)");

    auto* verify_cmd = app.add_subcommand("verify-product", "check product-level recovery from factors");
    verify_cmd->add_option("left", file, "first factor")->required();
    verify_cmd->add_option("right", file2, "second factor")->required();

    std::vector<std::uint64_t> seeds;
    double tol = 1e-8;
    auto* numeric_cmd = app.add_subcommand("numeric-check", "compare structural and numeric observability");
    numeric_cmd->add_option("graph", file, "graph file")->required();
    numeric_cmd->add_option("--observers", observers, "comma-separated node labels (default: planned set)");
    numeric_cmd->add_option("--seeds", seeds, "comma-separated weight seeds (default 1..10)")->delimiter(',');
    numeric_cmd->add_option("--tol", tol, "relative singular value tolerance")->check(CLI::PositiveNumber);

    SimulateFlags sim;
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimation error trace");
    simulate_cmd->add_option("graph", file, "graph file")->required();
    simulate_cmd->add_option("--observers", sim.observers, "comma-separated node labels (default: planned set)");
    simulate_cmd->add_option("--seed", sim.seed, "weight and noise seed");
    simulate_cmd->add_option("--trials", sim.options.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--steps", sim.options.steps, "time steps")->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--process-std", sim.options.process_std, "process noise std")
        ->check(CLI::NonNegativeNumber);
    simulate_cmd->add_option("--meas-std", sim.options.meas_std, "measurement noise std")
        ->check(CLI::NonNegativeNumber);
    simulate_cmd->add_option("--threads", sim.options.threads, "worker threads (0 = hardware)");
    simulate_cmd->add_option("--csv", sim.csv, "write the step,msee trace here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*analyze_cmd)
            return cmd_analyze(file, format);
        if (*product_cmd)
            return cmd_product(file, file2, out, dot);
        if (*observers_cmd)
            return cmd_observers(file);
        if (*check_cmd)
            return cmd_check(file, observers);
        if (*verify_cmd)
            return cmd_verify_product(file, file2);
        if (*numeric_cmd)
            return cmd_numeric_check(file, observers, seeds, tol);
        if (*simulate_cmd) {
            sim.options.seed = sim.seed;
            return cmd_simulate(file, sim);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.line() > 0)
            std::cerr << " (line " << e.line() << ", column " << e.column() << ")";
        std::cerr << '\n';
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
