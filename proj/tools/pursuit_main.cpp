#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pursuit/graph_io.hpp"
#include "pursuit/product.hpp"
#include "pursuit/report.hpp"
#include "pursuit/version.hpp"

namespace {

using pursuit::Json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pursuit::Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const Json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw pursuit::Error("cannot write " + out_path);
    out << text;
}

std::size_t state_budget() {
    if (const char* env = std::getenv("PURSUIT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw pursuit::Error("PURSUIT_BUDGET must be a positive integer");
    }
    return pursuit::kDefaultStateBudget;
}

pursuit::Walk parse_walk_csv(const std::string& csv) {
    pursuit::Walk w;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) throw pursuit::Error("empty entry in walk list");
        w.push_back(std::stoi(token));
    }
    return w;
}

struct CommonArgs {
    std::string graph_path;
    std::string out_path;
    int threads = 1;
};

int run_simulate(const CommonArgs& common, int source, int target, int delta,
                 int agents, std::uint64_t seed, const std::string& initial_csv,
                 bool tick_log) {
    const std::string bytes = read_file(common.graph_path);
    pursuit::Graph g = pursuit::load_graph(bytes);

    pursuit::PursuitConfig cfg;
    cfg.source = source;
    cfg.target = target;
    cfg.delta = delta;
    cfg.num_agents = agents;
    cfg.seed = seed;
    cfg.initial_walk = parse_walk_csv(initial_csv);
    cfg.record_ticks = tick_log;

    pursuit::PursuitTrace trace = pursuit::run_pursuit(g, cfg);
    pursuit::VisitFrequencies freq = pursuit::visit_frequencies(g, trace);

    Json config;
    config["graph"] = common.graph_path;
    config["source"] = source;
    config["target"] = target;
    config["delta"] = delta;
    config["agents"] = agents;
    config["initial"] = cfg.initial_walk;
    config["tick_log"] = tick_log;
    config["threads"] = common.threads;

    Json doc;
    doc["manifest"] = pursuit::make_manifest(
        "simulate", config, seed,
        Json{{"graph", pursuit::graph_input_digest(common.graph_path, bytes)}});
    Json body = pursuit::trace_to_json(g, trace, freq);
    for (auto& [key, value] : body.items()) doc[key] = value;
    if (tick_log) {
        Json ticks = Json::array();
        for (const auto& log : trace.tick_log) {
            Json a;
            a["spawn_tick"] = log.spawn_tick;
            a["positions"] = log.positions;
            ticks.push_back(a);
        }
        doc["tick_log"] = ticks;
    }
    write_output(common.out_path, doc);
    if (!common.out_path.empty()) {
        std::ofstream csv(common.out_path + ".visits.csv", std::ios::binary);
        if (!csv) throw pursuit::Error("cannot write " + common.out_path + ".visits.csv");
        csv << pursuit::visit_frequencies_csv(g, freq);
    }

    std::map<std::size_t, int> hist;
    for (const auto& w : trace.walks) ++hist[w.size()];
    std::cerr << "walk lengths:";
    for (const auto& [len, count] : hist) std::cerr << " " << len << "x" << count;
    std::cerr << "\n";
    return pursuit::kExitOk;
}

int run_analyze(const CommonArgs& common, int source, int target, int delta, int max_length) {
    const std::string bytes = read_file(common.graph_path);
    pursuit::Graph g = pursuit::load_graph(bytes);
    pursuit::DistanceMatrix dm = pursuit::all_pairs_distances(g);

    pursuit::AnalysisOptions opt;
    opt.source = source;
    opt.target = target;
    opt.delta = delta;
    opt.budget = state_budget();
    opt.max_length = max_length > 0 ? max_length : dm.at(source, target) + 5;

    pursuit::AnalysisResult res = pursuit::analyze_instance(g, dm, opt);

    Json config;
    config["graph"] = common.graph_path;
    config["source"] = source;
    config["target"] = target;
    config["delta"] = delta;
    config["max_length"] = opt.max_length;
    config["budget"] = opt.budget;
    config["threads"] = common.threads;

    Json doc;
    doc["manifest"] = pursuit::make_manifest(
        "analyze", config, 0,
        Json{{"graph", pursuit::graph_input_digest(common.graph_path, bytes)}});
    Json body = pursuit::analysis_to_json(g, opt, res);
    for (auto& [key, value] : body.items()) doc[key] = value;
    write_output(common.out_path, doc);

    std::cerr << "classes: " << res.classes.size() << ", convergent: "
              << (res.convergence.convergent() ? "up-to-bound" : "counterexample")
              << ", bound: " << opt.max_length << "\n";
    return res.convergence.convergent() ? pursuit::kExitOk : pursuit::kExitCounterexample;
}

int run_classify(const CommonArgs& common) {
    const std::string bytes = read_file(common.graph_path);
    pursuit::Graph g = pursuit::load_graph(bytes);

    Json config;
    config["graph"] = common.graph_path;
    config["threads"] = common.threads;

    Json doc;
    doc["manifest"] = pursuit::make_manifest(
        "classify", config, 0,
        Json{{"graph", pursuit::graph_input_digest(common.graph_path, bytes)}});
    Json body = pursuit::classify_to_json(g);
    for (auto& [key, value] : body.items()) doc[key] = value;
    write_output(common.out_path, doc);
    return pursuit::kExitOk;
}

int run_product(const std::string& path1, const std::string& path2, const std::string& kind,
                const std::string& out_path, int threads) {
    const std::string bytes1 = read_file(path1);
    const std::string bytes2 = read_file(path2);
    pursuit::Graph g1 = pursuit::load_graph(bytes1);
    pursuit::Graph g2 = pursuit::load_graph(bytes2);

    pursuit::ProductGraph pg;
    if (kind == "cartesian") {
        pg = pursuit::cartesian_product(g1, g2);
    } else if (kind == "strong") {
        pg = pursuit::strong_product(g1, g2);
    } else {
        throw CLI::ValidationError("--kind must be cartesian or strong");
    }

    Json config;
    config["graph1"] = path1;
    config["graph2"] = path2;
    config["kind"] = kind;
    config["threads"] = threads;

    // Emit the graph file with the manifest as a tolerated extra key, so the
    // output both loads as a graph and records how it was produced.
    Json doc = Json::parse(pursuit::dump_graph_json(pg.graph));
    doc["manifest"] = pursuit::make_manifest(
        "product", config, 0,
        Json{{"graph1", pursuit::graph_input_digest(path1, bytes1)},
             {"graph2", pursuit::graph_input_digest(path2, bytes2)}});
    write_output(out_path, doc);
    return pursuit::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"probabilistic chain pursuit on graphs: simulation and exact analysis"};
    app.set_version_flag("--version", std::string(pursuit::kToolVersion));
    app.require_subcommand(1);

    CommonArgs common;
    int source = 0, target = 0, delta = 2, agents = 1, max_length = 0, threads = 1;
    std::uint64_t seed = 0;
    std::string initial_csv, kind = "cartesian";
    bool tick_log = false;
    std::string product_g1, product_g2;

    auto* sim = app.add_subcommand("simulate", "run a seeded chain pursuit");
    sim->add_option("--graph", common.graph_path, "graph file")->required();
    sim->add_option("--source", source, "source vertex")->required();
    sim->add_option("--target", target, "target vertex")->required();
    sim->add_option("--delta", delta, "emergence interval (> 1)");
    sim->add_option("--agents", agents, "number of agents")->required();
    sim->add_option("--seed", seed, "RNG seed");
    sim->add_option("--initial", initial_csv, "walk of agent 0, comma-separated vertices")
        ->required();
    sim->add_flag("--tick-log", tick_log, "record per-tick agent positions");
    sim->add_option("--out", common.out_path, "output JSON path (stdout if omitted)");
    sim->add_option("--threads", common.threads, "thread cap");

    auto* ana = app.add_subcommand("analyze", "enumerate closed classes and verdicts");
    ana->add_option("--graph", common.graph_path, "graph file")->required();
    ana->add_option("--source", source, "source vertex")->required();
    ana->add_option("--target", target, "target vertex")->required();
    ana->add_option("--delta", delta, "delay parameter (> 1)");
    ana->add_option("--max-length", max_length, "walk-length bound (default distance+5)");
    ana->add_option("--out", common.out_path, "output JSON path (stdout if omitted)");
    ana->add_option("--threads", common.threads, "thread cap");

    auto* cls = app.add_subcommand("classify", "chordality and pseudo-modularity certificates");
    cls->add_option("--graph", common.graph_path, "graph file")->required();
    cls->add_option("--out", common.out_path, "output JSON path (stdout if omitted)");
    cls->add_option("--threads", common.threads, "thread cap");

    auto* prod = app.add_subcommand("product", "build a graph product");
    prod->add_option("graph1", product_g1, "first factor graph file")->required();
    prod->add_option("graph2", product_g2, "second factor graph file")->required();
    prod->add_option("--kind", kind, "cartesian | strong");
    prod->add_option("--out", common.out_path, "output graph path (stdout if omitted)");
    prod->add_option("--threads", threads, "thread cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? pursuit::kExitOk : pursuit::kExitUsage;
    }

    try {
        if (sim->parsed()) {
            if (delta < 2) throw pursuit::Error("--delta must exceed 1");
            return run_simulate(common, source, target, delta, agents, seed, initial_csv,
                                tick_log);
        }
        if (ana->parsed()) {
            if (delta < 2) throw pursuit::Error("--delta must exceed 1");
            return run_analyze(common, source, target, delta, max_length);
        }
        if (cls->parsed()) return run_classify(common);
        if (prod->parsed()) return run_product(product_g1, product_g2, kind, common.out_path, threads);
    } catch (const pursuit::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return pursuit::kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return pursuit::kExitUsage;
    }
    return pursuit::kExitUsage;
}
