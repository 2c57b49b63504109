#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "pursuit/graph.hpp"
#include "pursuit/walk.hpp"

namespace pursuit {

// A finite set of equal-length walks from s to t, closed under atomic
// deformations with no reachable shorter walk. These are exactly the closed
// communicating classes of the walk chain for the given delta.
struct ClosedClass {
    int source = 0;
    int target = 0;
    int delta = 2;
    int length = 0;            // common vertex count
    std::vector<Walk> walks;   // sorted lexicographically

    bool contains(const Walk& w) const;
};

// Every walk from s to t with exactly `length` vertices whose full
// delta-windows all span distance delta. Lexicographic order.
std::vector<Walk> enumerate_delta_optimal_walks(const Graph& g, const DistanceMatrix& dm,
                                                int s, int t, int delta, int length,
                                                std::size_t budget = kDefaultStateBudget);

// All closed classes with walk length <= max_length, ordered by length then
// first walk. There is always at least one class, made of shortest paths.
std::vector<ClosedClass> enumerate_closed_classes(const Graph& g, const DistanceMatrix& dm,
                                                  int s, int t, int delta, int max_length,
                                                  std::size_t budget = kDefaultStateBudget);

// Bounded verdicts. Walk spaces are infinite, so "up to bound" is all a
// terminating procedure can certify; the bound is part of the result.
enum class Convergence { kConvergentUpToBound, kCounterexample };

struct ConvergenceVerdict {
    Convergence kind;
    int max_length;
    // A closed class longer than a shortest path, when one exists in bound.
    std::optional<ClosedClass> counterexample;

    bool convergent() const { return kind == Convergence::kConvergentUpToBound; }
};

ConvergenceVerdict is_convergent_bounded(const Graph& g, const DistanceMatrix& dm,
                                         int s, int t, int delta, int max_length,
                                         std::size_t budget = kDefaultStateBudget);

enum class Stability { kStableUpToBound, kMultipleClasses, kNonShortestClass };

struct StabilityVerdict {
    Stability kind;
    int max_length;
    std::vector<ClosedClass> classes;

    bool stable() const { return kind == Stability::kStableUpToBound; }
};

// Stable requires a unique closed class in bound that is exactly the set of
// all shortest paths (cross-checked against an independent enumeration).
StabilityVerdict is_stable_bounded(const Graph& g, const DistanceMatrix& dm,
                                   int s, int t, int delta, int max_length,
                                   std::size_t budget = kDefaultStateBudget);

// Probability that the successor of an agent walking U takes walk X, from
// the first-step product formula. Only meaningful within a closed class,
// whose delta-optimality the derivation relies on.
mpq_class transition_probability(const Graph& g, const DistanceMatrix& dm,
                                 const ClosedClass& cls, const Walk& U, const Walk& X);

struct TransitionMatrix {
    std::vector<Walk> states;                 // == class walks, same order
    std::vector<std::vector<mpq_class>> rows; // exact, each row sums to 1
    int delta = 2;

    int size() const { return static_cast<int>(states.size()); }
    bool doubly_stochastic() const;
    bool irreducible() const;
    bool aperiodic() const;
};

// Throws Error if any row fails to sum to exactly 1 (a class-closure bug).
TransitionMatrix transition_matrix(const Graph& g, const DistanceMatrix& dm,
                                   const ClosedClass& cls);

enum class SolveMethod { kExactRational, kPowerIteration };

struct StationaryDistribution {
    SolveMethod method;
    std::vector<mpq_class> exact;   // filled for kExactRational
    std::vector<double> approx;     // filled for both methods

    bool exactly_uniform() const;
    double max_deviation_from_uniform() const;
};

// Exact rational solve up to kExactSolveLimit states, damped power iteration
// beyond (or when forced). Throws Error on reducible input.
inline constexpr int kExactSolveLimit = 256;
inline constexpr double kPowerIterationTol = 1e-12;

StationaryDistribution stationary_distribution(const TransitionMatrix& m,
                                               std::optional<SolveMethod> force = std::nullopt);

// (i,j)-shuffle, 1-based indices as in S^i_j: replace the sub-walk from the
// i-th to the j-th vertex with a uniformly random shortest path between
// those vertices. j clamps to the walk length; S^i_i is the identity.
Walk shuffle_walk(const Graph& g, const DistanceMatrix& dm, const Walk& u,
                  int i, int j, Rng& rng);
Walk shuffle_walk(ShortestPathSampler& sampler, const Walk& u, int i, int j, Rng& rng);

// The sequential process S^n_{n+delta} ( ... S^2_{2+delta} ( S^1_{1+delta} (u))).
// Within a closed class this samples the successor walk with exactly the
// transition-matrix row probabilities, which the tests exploit as an
// independent route to the same distribution.
Walk sequential_shuffle(const Graph& g, const DistanceMatrix& dm, const Walk& u,
                        int delta, Rng& rng);
Walk sequential_shuffle(ShortestPathSampler& sampler, const Walk& u, int delta, Rng& rng);

}  // namespace pursuit
