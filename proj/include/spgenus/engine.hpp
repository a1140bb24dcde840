#ifndef SPGENUS_ENGINE_HPP
#define SPGENUS_ENGINE_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "spgenus/multigraph.hpp"
#include "spgenus/pgd.hpp"

namespace spgenus {

struct PhaseTimings {
    double validate_seconds = 0;
    double decompose_seconds = 0;
    double evaluate_seconds = 0;
    double total_seconds = 0;
};

// Intermediates of the three-string pipeline, kept so tests and --pgd output
// can pin them exactly.
struct CubicTrace {
    Vertex terminal_p = -1;
    Vertex terminal_q = -1;
    int reduction_steps = 0;
    std::array<UUPartials, 3> strands;
    ClosurePartials join; // of strands[0] and strands[1]
};

// One independent piece of the bridge assembly: a non-bridge block (possibly
// a cycle) or a vertex all of whose edges are bridges.
struct PieceSummary {
    enum class Kind { Block, Cycle, BareVertex };
    Kind kind = Kind::Block;
    int num_vertices = 0;
    GenusDistribution gd;
};

struct AssemblyTrace {
    std::vector<PieceSummary> pieces;
    int num_bridges = 0;
    BigInt scalar_product = 1; // product of all bar-insertion scalars
};

enum class Method { CubicSp, GeneralTw2 };

struct ComputationReport {
    int num_vertices = 0;
    int num_edges = 0;
    std::vector<int> degree_histogram;
    Method method = Method::CubicSp;
    std::optional<CubicTrace> cubic;       // present for Method::CubicSp
    std::optional<AssemblyTrace> assembly; // present for Method::GeneralTw2
    GenusDistribution gd;
    PhaseTimings timings;
};

// Three-string pipeline for a cubic biconnected series-parallel graph:
// certify by reduction to the dipole, pick terminals (or validate the given
// pair), split into three strings, evaluate each, join two, close with the
// third.  Throws ValidationError if certification or the terminals fail.
ComputationReport gd_cubic_biconnected_sp(
    const Multigraph& g,
    std::optional<std::pair<Vertex, Vertex>> terminals = std::nullopt);

// General pipeline for a connected graph with max degree <= 3 and treewidth
// <= 2: per-block genus distributions (degree-2 vertices smoothed away;
// cycles contribute (1)), then bridges reattach pieces one at a time, each
// bar scaling the convolution by the current rotation sizes at its ends.
ComputationReport gd_treewidth2_maxdeg3(const Multigraph& g);

// Validates degree and treewidth, then dispatches: 3-regular biconnected
// graphs take the three-string pipeline, everything else the general one.
// `terminals` is only meaningful for the former; passing it with a graph
// that dispatches to the latter is a validation error.
ComputationReport gd_auto(const Multigraph& g,
                          std::optional<std::pair<Vertex, Vertex>> terminals = std::nullopt);

} // namespace spgenus

#endif
