#pragma once

#include <cstddef>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

inline constexpr std::size_t kDefaultStateBudget = 1'000'000;

// True iff every consecutive pair is an edge. A single vertex is a valid walk.
// Stored walks never repeat a vertex consecutively; an adjacent repeat fails
// here because v-v is never a stored edge.
bool validate_walk(const Graph& g, const Walk& w);

// d(v_i, v_{i+delta}) == delta for every window that fits. Windows shorter
// than delta at the tail are unconstrained, exactly as in the definition.
bool is_delta_optimal(const Graph& g, const DistanceMatrix& dm, const Walk& w, int delta);

// Index pair certifying local non-optimality: j-i > d(v_i,v_j) with j-i
// minimal. `gap` is j-i, `dist` is d(v_i,v_j).
struct DiscrepancyPair {
    int i;
    int j;
    int gap;
    int dist;

    bool operator==(const DiscrepancyPair&) const = default;
};

// All pairs attaining the minimal gap, ordered by i. Empty iff w is a
// shortest path between its endpoints.
std::vector<DiscrepancyPair> discrepancy_pairs(const Graph& g, const DistanceMatrix& dm,
                                               const Walk& w);

// Every walk obtainable from w by replacing one sub-walk U2 (|U2| <= delta-1)
// with a no-longer sub-walk, endpoints fixed. Includes w itself. Results are
// canonical walks (consecutive repeats collapsed), sorted, deduplicated.
// A deformation never lengthens the walk.
std::vector<Walk> atomic_deformations(const Graph& g, const Walk& w, int delta);

struct ClosureResult {
    std::vector<Walk> walks;  // sorted lexicographically
    bool shortened = false;   // some reachable walk is strictly shorter than w
    bool complete = true;     // false when the state budget ran out
};

// BFS closure of w under atomic deformations. When a shorter walk is reached
// the search keeps going, so a complete result is reachable-closed.
ClosureResult deformation_closure(const Graph& g, const Walk& w, int delta,
                                  std::size_t budget = kDefaultStateBudget);

struct WalkHash {
    std::size_t operator()(const Walk& w) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (int v : w) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace pursuit
