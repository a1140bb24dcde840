#ifndef SPGENUS_DECOMPOSE_HPP
#define SPGENUS_DECOMPOSE_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "spgenus/multigraph.hpp"
#include "spgenus/pgd.hpp"

namespace spgenus {

// A dmt-string: two univalent roots, every other vertex trivalent, connected.
struct RootedString {
    Multigraph graph;
    Vertex source_root;
    Vertex target_root;

    void validate() const; // throws ValidationError on invariant violation
};

// Expression tree over K2 leaves with modified series/parallel nodes.
// Evaluating bottom-up with mod_series/mod_parallel yields the pgd of the
// physical string the tree was parsed from.
struct DmtExpression {
    enum class Kind : std::uint8_t { K2, ModSeries, ModParallel };
    Kind kind = Kind::K2;
    // ModParallel: exactly 2 children; ModSeries: >= 2, in spine order.
    std::vector<DmtExpression> children;

    static DmtExpression leaf() { return DmtExpression{}; }
    static DmtExpression parallel(DmtExpression a, DmtExpression b);
    static DmtExpression series(std::vector<DmtExpression> parts);

    int leaf_count() const;
    bool operator==(const DmtExpression&) const = default;
};

// dmt-step: trisect edge e and install a new edge parallel to its middle
// third.  Adds two trivalent vertices and three edges.
Multigraph apply_tau(const Multigraph& g, EdgeId e);

struct TauInverseStep {
    Vertex u;
    Vertex v;
};

// Outcome of the reduction of a 3-regular graph toward the dipole D3.
struct DipoleReduction {
    bool success;
    std::vector<TauInverseStep> steps;
    // On failure: the graph at the stuck point (no doubled pair, or the next
    // smoothing would create a self-loop).
    std::optional<Multigraph> stuck_witness;
};

// Repeatedly deletes one edge of a pair joined by exactly two edges and
// smooths the two endpoints.  Success (terminal graph D3) certifies that g
// is cubic, biconnected, and series-parallel.  The lowest-numbered eligible
// pair is taken each step, so runs are reproducible.
DipoleReduction reduce_to_dipole(const Multigraph& g);

// Splits terminals p and q into one univalent copy per incident edge.  The
// result must fall apart into exactly three strands, each holding one copy
// of p and one of q; otherwise the pair is invalid.
std::array<RootedString, 3> split_into_strands(const Multigraph& g, Vertex p, Vertex q);

// First vertex pair (adjacent pairs first, then all pairs, deterministic
// order) for which the graph splits into three parseable dmt-strings.
// Requires a pre-validated cubic biconnected series-parallel graph.
std::pair<Vertex, Vertex> find_terminals(const Multigraph& g);

// True iff split_into_strands(g, p, q) and parsing of all three strands
// succeed; the predicate find_terminals scans with.
bool terminals_valid(const Multigraph& g, Vertex p, Vertex q);

// Decomposes a dmt-string: the spine from p to q alternates bridges and
// two-gate blocks; each block is the modified parallel of its two sides, and
// the whole string is the modified series of its blocks in spine order.
// Throws ValidationError("not a dmt-string: ...") on structure violations.
DmtExpression parse_dmt_string(const RootedString& s);

// Evaluates parse_dmt_string(s) bottom-up with pgd(K2) = uu'_0 = 1.
UUPartials pgd_of_string(const RootedString& s);
UUPartials evaluate_expression(const DmtExpression& expr);

// Applies tau_steps dmt-steps to uniformly random edges of D3.  Output is
// cubic, biconnected, and series-parallel with 2 + 2*tau_steps vertices;
// deterministic per (tau_steps, seed).
Multigraph random_cubic_sp(int tau_steps, std::uint64_t seed);

// The dipole D_n: two vertices joined by n parallel edges.
Multigraph dipole(int n);

} // namespace spgenus

#endif
