#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

// True iff v's neighbors are pairwise adjacent.
bool is_simplicial(const Graph& g, int v);

// Either a perfect elimination ordering of all vertices, or a chordless
// cycle of at least four vertices. Exactly one side is populated.
struct ChordalityCertificate {
    bool chordal = false;
    std::vector<int> elimination_order;
    std::vector<int> chordless_cycle;
};

ChordalityCertificate is_chordal(const Graph& g);

// Independent replays of the certificates, for soundness checks.
bool replay_elimination_order(const Graph& g, const std::vector<int>& order);
bool verify_chordless_cycle(const Graph& g, const std::vector<int>& cycle);

struct DiskSpec {
    int center = 0;
    int radius = 0;

    bool operator==(const DiskSpec&) const = default;
};

// Three pairwise intersecting disks with empty common intersection.
struct HellyWitness {
    std::array<DiskSpec, 3> disks;
};

struct PseudoModularResult {
    bool pseudo_modular = false;
    std::optional<HellyWitness> witness;
};

// Exhaustive scan over disk triples, centers strictly increasing, radii up
// to the diameter. Returns the lexicographically least witness (by centers,
// then radii) when the three-disk Helly property fails. Intended for small
// graphs; the scan is cubic in vertices times radii.
PseudoModularResult is_pseudo_modular(const Graph& g, const DistanceMatrix& dm);

bool verify_helly_witness(const Graph& g, const DistanceMatrix& dm, const HellyWitness& w);

}  // namespace pursuit
