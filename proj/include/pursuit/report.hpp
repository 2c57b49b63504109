#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "pursuit/graph.hpp"
#include "pursuit/markov.hpp"
#include "pursuit/simulate.hpp"

namespace pursuit {

using Json = nlohmann::ordered_json;

// Exit-code contract shared by the CLI commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCounterexample = 2;
inline constexpr int kExitBudget = 3;

std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

// Every output document embeds one of these; identical manifests mean the
// command will reproduce identical payloads. No timestamps anywhere.
Json make_manifest(const std::string& subcommand, const Json& config,
                   std::uint64_t seed, const Json& input_digests);

Json graph_input_digest(const std::string& path, const std::string& bytes);

struct AnalysisOptions {
    int source = 0;
    int target = 0;
    int delta = 2;
    int max_length = 0;
    std::size_t budget = kDefaultStateBudget;
    // Classes above this size get no matrix or stationary vector.
    int matrix_limit = 2048;
};

struct ClassReport {
    ClosedClass cls;
    bool has_matrix = false;
    bool doubly_stochastic = false;
    bool irreducible = false;
    bool aperiodic = false;
    std::optional<StationaryDistribution> stationary;
};

struct AnalysisResult {
    int distance = 0;
    std::vector<ClassReport> classes;
    ConvergenceVerdict convergence{Convergence::kConvergentUpToBound, 0, std::nullopt};
    StabilityVerdict stability;
};

// The engine behind `analyze`: classes, matrices, stationary vectors and
// both bounded verdicts for one (source, target, delta) instance.
AnalysisResult analyze_instance(const Graph& g, const DistanceMatrix& dm,
                                const AnalysisOptions& opt);

Json analysis_to_json(const Graph& g, const AnalysisOptions& opt, const AnalysisResult& res);

Json trace_to_json(const Graph& g, const PursuitTrace& trace, const VisitFrequencies& freq);
std::string visit_frequencies_csv(const Graph& g, const VisitFrequencies& freq);

Json classify_to_json(const Graph& g);

}  // namespace pursuit
