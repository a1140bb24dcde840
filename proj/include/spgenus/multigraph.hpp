#ifndef SPGENUS_MULTIGRAPH_HPP
#define SPGENUS_MULTIGRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "spgenus/errors.hpp"

namespace spgenus {

using Vertex = int;
using EdgeId = int;

struct Edge {
    EdgeId id;
    Vertex u;
    Vertex v;

    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool operator==(const Edge&) const = default;
};

// Loopless multigraph over dense vertex ids 0..n-1.  Parallel edges are
// distinguished by edge id; edge ids follow insertion order.  Immutable
// after construction; every transformation returns a new graph.
class Multigraph {
public:
    Multigraph() = default;

    // Endpoints must be distinct (no self-loops) and < num_vertices.
    static Multigraph from_edges(int num_vertices,
                                 const std::vector<std::pair<Vertex, Vertex>>& endpoints);

    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<size_t>(e)); }

    // Edge ids incident to v, in ascending id order.
    const std::vector<EdgeId>& incident_edges(Vertex v) const {
        return incidence_.at(static_cast<size_t>(v));
    }

    int degree(Vertex v) const { return static_cast<int>(incident_edges(v).size()); }
    int max_degree() const;
    // histogram[d] = number of vertices of degree d
    std::vector<int> degree_histogram() const;
    bool is_regular(int d) const;

    int num_components() const;
    bool is_connected() const { return num_components() == 1; }

    // beta(G) = |E| - |V| + #components
    int cycle_rank() const { return num_edges() - num_vertices() + num_components(); }

    // Number of edges joining exactly the pair {a, b}.
    int multiplicity(Vertex a, Vertex b) const;

    // Same graph with vertices relabeled in order of first appearance in the
    // edge list; fixed point of parse(serialize(.)).
    Multigraph canonicalized() const;

    // Original input labels when parsed from a document, else decimal ids.
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Vertex> vertex_by_label(const std::string& label) const;

    bool operator==(const Multigraph& rhs) const {
        return num_vertices_ == rhs.num_vertices_ && edges_ == rhs.edges_;
    }

private:
    int num_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<std::string> labels_;

    friend Multigraph parse_graph(const std::string& text);
    void rebuild_incidence();
};

// Edge-list document: one edge per line as two whitespace-separated vertex
// labels; '#' starts a comment line; duplicate lines denote parallel edges.
// Labels are remapped to dense ids in order of first appearance.
// Rejects self-loops, empty documents, and disconnected graphs.
Multigraph parse_graph(const std::string& text);

// One "u v" line per edge in id order, using dense integer ids.
std::string serialize_graph(const Multigraph& g);

struct BlockDecomposition {
    // Each block as the list of its edge ids; every edge is in exactly one block.
    std::vector<std::vector<EdgeId>> blocks;
    std::set<Vertex> cut_vertices;
    // Indices into `blocks` of the single-edge blocks.
    std::vector<int> bridges;
    // block_of_vertex[v] = indices of blocks containing v (1 unless v is a cut vertex).
    std::vector<std::vector<int>> blocks_of_vertex;

    bool is_bridge(int block_index) const;
};

// Standard DFS biconnected decomposition.  Requires a connected graph.
BlockDecomposition block_decomposition(const Multigraph& g);

// Result marker for smoothing a graph that is a single cycle.
struct CycleMarker {
    bool operator==(const CycleMarker&) const = default;
};

// Suppresses every degree-2 vertex (its two incident edges become one edge
// joining the neighbors).  A cycle would smooth to a loop, so it yields
// CycleMarker instead.  Requires a connected graph.
std::variant<Multigraph, CycleMarker> smooth_degree2(const Multigraph& g);

// True iff g has no K4-minor: g reduces to single edges/vertices under
// exhaustive parallel-edge deletion, degree-2 suppression, and degree-<=1
// vertex deletion.
bool is_treewidth_at_most_2(const Multigraph& g);

} // namespace spgenus

#endif
