#include "pursuit/report.hpp"

#include <map>
#include <sstream>

#include "pursuit/recognize.hpp"
#include "pursuit/version.hpp"

namespace pursuit {

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::ostringstream out;
    out << std::hex << fnv1a64(bytes);
    return out.str();
}

Json make_manifest(const std::string& subcommand, const Json& config,
                   std::uint64_t seed, const Json& input_digests) {
    Json m;
    m["tool"] = kToolName;
    m["version"] = kToolVersion;
    m["subcommand"] = subcommand;
    m["config"] = config;
    m["seed"] = seed;
    m["inputs"] = input_digests;
    return m;
}

Json graph_input_digest(const std::string& path, const std::string& bytes) {
    Json j;
    j["path"] = path;
    j["fnv1a64"] = fnv1a64_hex(bytes);
    return j;
}

AnalysisResult analyze_instance(const Graph& g, const DistanceMatrix& dm,
                                const AnalysisOptions& opt) {
    AnalysisResult res;
    res.distance = dm.at(opt.source, opt.target);
    if (res.distance == DistanceMatrix::kUnreachable) {
        throw Error("source and target are not connected");
    }
    auto classes = enumerate_closed_classes(g, dm, opt.source, opt.target, opt.delta,
                                            opt.max_length, opt.budget);
    for (auto& cls : classes) {
        ClassReport report;
        report.cls = std::move(cls);
        if (static_cast<int>(report.cls.walks.size()) <= opt.matrix_limit) {
            TransitionMatrix m = transition_matrix(g, dm, report.cls);
            report.has_matrix = true;
            report.doubly_stochastic = m.doubly_stochastic();
            report.irreducible = m.irreducible();
            report.aperiodic = m.aperiodic();
            report.stationary = stationary_distribution(m);
        }
        res.classes.push_back(std::move(report));
    }
    res.convergence =
        is_convergent_bounded(g, dm, opt.source, opt.target, opt.delta, opt.max_length, opt.budget);
    res.stability =
        is_stable_bounded(g, dm, opt.source, opt.target, opt.delta, opt.max_length, opt.budget);
    return res;
}

namespace {

Json walk_to_json(const Walk& w) {
    Json arr = Json::array();
    for (int v : w) arr.push_back(v);
    return arr;
}

constexpr std::size_t kWalkSampleLimit = 32;

}  // namespace

Json analysis_to_json(const Graph& g, const AnalysisOptions& opt, const AnalysisResult& res) {
    (void)g;
    Json j;
    j["source"] = opt.source;
    j["target"] = opt.target;
    j["delta"] = opt.delta;
    j["max_length"] = opt.max_length;
    j["distance"] = res.distance;

    Json classes = Json::array();
    for (const auto& report : res.classes) {
        Json c;
        c["length"] = report.cls.length;
        c["size"] = report.cls.walks.size();
        Json walks = Json::array();
        for (std::size_t i = 0; i < report.cls.walks.size() && i < kWalkSampleLimit; ++i) {
            walks.push_back(walk_to_json(report.cls.walks[i]));
        }
        c["walks"] = walks;
        c["walks_truncated"] = report.cls.walks.size() > kWalkSampleLimit;
        if (report.has_matrix) {
            c["doubly_stochastic"] = report.doubly_stochastic;
            c["irreducible"] = report.irreducible;
            c["aperiodic"] = report.aperiodic;
            const auto& st = *report.stationary;
            c["stationary_method"] =
                st.method == SolveMethod::kExactRational ? "exact-rational" : "power-iteration";
            Json vec = Json::array();
            if (st.method == SolveMethod::kExactRational) {
                for (const auto& q : st.exact) vec.push_back(q.get_str());
            } else {
                for (double x : st.approx) vec.push_back(x);
            }
            c["stationary"] = vec;
        } else {
            c["stationary_method"] = "skipped-class-too-large";
        }
        classes.push_back(c);
    }
    j["classes"] = classes;

    Json verdicts;
    verdicts["convergent"] = res.convergence.convergent() ? "convergent-up-to-bound"
                                                          : "counterexample";
    if (res.convergence.counterexample) {
        Json cx;
        cx["length"] = res.convergence.counterexample->length;
        cx["size"] = res.convergence.counterexample->walks.size();
        cx["walk"] = walk_to_json(res.convergence.counterexample->walks.front());
        verdicts["counterexample"] = cx;
    }
    switch (res.stability.kind) {
        case Stability::kStableUpToBound: verdicts["stable"] = "stable-up-to-bound"; break;
        case Stability::kMultipleClasses: verdicts["stable"] = "multiple-classes"; break;
        case Stability::kNonShortestClass: verdicts["stable"] = "non-shortest-class"; break;
    }
    verdicts["bound"] = opt.max_length;
    j["verdicts"] = verdicts;
    return j;
}

Json trace_to_json(const Graph& g, const PursuitTrace& trace, const VisitFrequencies& freq) {
    Json j;
    Json agents = Json::array();
    for (std::size_t i = 0; i < trace.walks.size(); ++i) {
        Json a;
        a["index"] = i;
        a["walk"] = walk_to_json(trace.walks[i]);
        agents.push_back(a);
    }
    j["agents"] = agents;

    std::map<std::size_t, int> histogram;
    for (const auto& w : trace.walks) ++histogram[w.size()];
    Json hist;
    for (const auto& [len, count] : histogram) hist[std::to_string(len)] = count;

    Json summary;
    summary["num_agents"] = trace.walks.size();
    summary["lengths_histogram"] = hist;
    Json visits = Json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        Json entry;
        entry["vertex"] = v;
        entry["count"] = freq.counts[v];
        entry["rate"] = freq.rates[v];
        visits.push_back(entry);
    }
    summary["visit_frequencies"] = visits;
    j["summary"] = summary;
    return j;
}

std::string visit_frequencies_csv(const Graph& g, const VisitFrequencies& freq) {
    std::ostringstream out;
    out << "vertex,count,rate\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << v << "," << freq.counts[v] << "," << freq.rates[v] << "\n";
    }
    return out.str();
}

Json classify_to_json(const Graph& g) {
    Json j;
    ChordalityCertificate cert = is_chordal(g);
    Json chordal;
    chordal["verdict"] = cert.chordal;
    if (cert.chordal) {
        chordal["elimination_order"] = cert.elimination_order;
    } else {
        chordal["chordless_cycle"] = cert.chordless_cycle;
    }
    j["chordal"] = chordal;

    DistanceMatrix dm = all_pairs_distances(g);
    Json pm;
    if (!dm.connected()) {
        pm["verdict"] = nullptr;
        pm["note"] = "graph is disconnected";
    } else {
        PseudoModularResult res = is_pseudo_modular(g, dm);
        pm["verdict"] = res.pseudo_modular;
        if (res.witness) {
            Json disks = Json::array();
            for (const auto& d : res.witness->disks) {
                Json dj;
                dj["center"] = d.center;
                dj["radius"] = d.radius;
                disks.push_back(dj);
            }
            pm["witness"] = disks;
        }
    }
    j["pseudo_modular"] = pm;
    return j;
}

}  // namespace pursuit
