#include "spgenus/engine.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <string>

#include "spgenus/decompose.hpp"
#include "spgenus/productions.hpp"

namespace spgenus {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int count_trivalent(const Multigraph& g) {
    const std::vector<int> hist = g.degree_histogram();
    return hist.size() > 3 ? hist[3] : 0;
}

// Every run ends here: the embedding census, the consecutive-support rule,
// and the cycle-rank genus bound hold for every correct computation, so a
// violation is a defect in this library, not in the input.
void check_result(const Multigraph& g, const GenusDistribution& gd) {
    BigInt expected = 1;
    expected <<= count_trivalent(g);
    if (gd.total() != expected)
        throw InternalError("embedding census mismatch: got " + gd.total().str() +
                            ", expected 2^" + std::to_string(count_trivalent(g)));
    if (!gd.support_is_consecutive())
        throw InternalError("genus support is not a consecutive interval");
    if (gd.max_genus() > g.cycle_rank())
        throw InternalError("distribution exceeds the cycle-rank genus bound");
}

void fill_summary(ComputationReport& r, const Multigraph& g) {
    r.num_vertices = g.num_vertices();
    r.num_edges = g.num_edges();
    r.degree_histogram = g.degree_histogram();
}

// Subgraph spanned by the given edges, vertices renumbered ascending.
Multigraph edge_subgraph(const Multigraph& g, const std::vector<EdgeId>& eids) {
    std::map<Vertex, Vertex> remap;
    for (EdgeId eid : eids) {
        remap.emplace(g.edge(eid).u, 0);
        remap.emplace(g.edge(eid).v, 0);
    }
    Vertex next = 0;
    for (auto& [unused, id] : remap) id = next++;
    std::vector<std::pair<Vertex, Vertex>> endpoints;
    endpoints.reserve(eids.size());
    for (EdgeId eid : eids)
        endpoints.emplace_back(remap.at(g.edge(eid).u), remap.at(g.edge(eid).v));
    return Multigraph::from_edges(next, endpoints);
}

} // namespace

ComputationReport gd_cubic_biconnected_sp(const Multigraph& g,
                                          std::optional<std::pair<Vertex, Vertex>> terminals) {
    const auto t0 = Clock::now();
    ComputationReport report;
    fill_summary(report, g);
    report.method = Method::CubicSp;

    DipoleReduction cert = reduce_to_dipole(g);
    if (!cert.success) {
        const Multigraph& w = *cert.stuck_witness;
        throw ValidationError(
            "not a cubic biconnected series-parallel graph: reduction stuck at " +
            std::to_string(w.num_vertices()) + " vertices / " +
            std::to_string(w.num_edges()) + " edges after " +
            std::to_string(cert.steps.size()) + " steps");
    }
    CubicTrace trace;
    trace.reduction_steps = static_cast<int>(cert.steps.size());
    report.timings.validate_seconds = seconds_since(t0);

    const auto t1 = Clock::now();
    std::pair<Vertex, Vertex> pq;
    if (terminals) {
        pq = *terminals;
        if (!terminals_valid(g, pq.first, pq.second))
            throw ValidationError("invalid terminal pair: the graph does not split into "
                                  "three strings at these vertices");
    } else {
        pq = find_terminals(g);
    }
    trace.terminal_p = pq.first;
    trace.terminal_q = pq.second;
    const std::array<RootedString, 3> strands = split_into_strands(g, pq.first, pq.second);
    std::array<DmtExpression, 3> exprs;
    for (int i = 0; i < 3; ++i) exprs[static_cast<size_t>(i)] = parse_dmt_string(strands[static_cast<size_t>(i)]);
    report.timings.decompose_seconds = seconds_since(t1);

    const auto t2 = Clock::now();
    for (int i = 0; i < 3; ++i)
        trace.strands[static_cast<size_t>(i)] = evaluate_expression(exprs[static_cast<size_t>(i)]);
    trace.join = join_parallel(trace.strands[0], trace.strands[1]);
    report.gd = close_parallel(trace.join, trace.strands[2]);
    report.timings.evaluate_seconds = seconds_since(t2);

    report.cubic = std::move(trace);
    check_result(g, report.gd);
    report.timings.total_seconds = seconds_since(t0);
    return report;
}

ComputationReport gd_treewidth2_maxdeg3(const Multigraph& g) {
    const auto t0 = Clock::now();
    ComputationReport report;
    fill_summary(report, g);
    report.method = Method::GeneralTw2;

    if (g.max_degree() > 3)
        throw ValidationError("a vertex has degree " + std::to_string(g.max_degree()) +
                              "; only degrees up to 3 are supported");
    if (!is_treewidth_at_most_2(g))
        throw ValidationError("the graph has a K4-minor (treewidth greater than 2)");
    report.timings.validate_seconds = seconds_since(t0);

    const auto t1 = Clock::now();
    const BlockDecomposition bd = block_decomposition(g);
    report.timings.decompose_seconds = seconds_since(t1);

    const auto t2 = Clock::now();
    AssemblyTrace trace;
    const int n = g.num_vertices();
    std::vector<int> piece_of(static_cast<size_t>(n), -1);
    std::vector<int> rotation_size(static_cast<size_t>(n), 0); // current assembled degree
    std::vector<GenusDistribution> piece_gd;
    std::vector<EdgeId> bridge_edges;

    for (size_t bi = 0; bi < bd.blocks.size(); ++bi) {
        if (bd.is_bridge(static_cast<int>(bi))) {
            bridge_edges.push_back(bd.blocks[bi][0]);
            continue;
        }
        const Multigraph block = edge_subgraph(g, bd.blocks[bi]);
        PieceSummary piece;
        piece.num_vertices = block.num_vertices();
        const auto smoothed = smooth_degree2(block);
        if (std::holds_alternative<CycleMarker>(smoothed)) {
            piece.kind = PieceSummary::Kind::Cycle;
            piece.gd = GenusDistribution{1};
        } else {
            piece.kind = PieceSummary::Kind::Block;
            try {
                piece.gd = gd_cubic_biconnected_sp(std::get<Multigraph>(smoothed)).gd;
            } catch (const ValidationError& e) {
                // A block of a validated graph always smooths to a cycle or a
                // cubic biconnected series-parallel graph.
                throw InternalError(std::string("block pipeline rejected its own block: ") +
                                    e.what());
            }
        }
        const int pid = static_cast<int>(piece_gd.size());
        piece_gd.push_back(piece.gd);
        trace.pieces.push_back(std::move(piece));
        // Max degree 3 means no vertex can sit in two non-bridge blocks, so
        // this assignment never collides.
        for (EdgeId eid : bd.blocks[bi]) {
            const Edge& e = g.edge(eid);
            for (Vertex v : {e.u, e.v}) {
                if (piece_of[static_cast<size_t>(v)] != -1 &&
                    piece_of[static_cast<size_t>(v)] != pid)
                    throw InternalError("vertex shared by two non-bridge blocks");
                piece_of[static_cast<size_t>(v)] = pid;
                ++rotation_size[static_cast<size_t>(v)];
            }
        }
    }
    // Vertices whose every edge is a bridge form their own one-vertex pieces
    // with an empty rotation.
    for (Vertex v = 0; v < n; ++v) {
        if (piece_of[static_cast<size_t>(v)] == -1) {
            PieceSummary piece;
            piece.kind = PieceSummary::Kind::BareVertex;
            piece.num_vertices = 1;
            piece.gd = GenusDistribution{1};
            piece_of[static_cast<size_t>(v)] = static_cast<int>(piece_gd.size());
            piece_gd.push_back(piece.gd);
            trace.pieces.push_back(std::move(piece));
        }
    }
    trace.num_bridges = static_cast<int>(bridge_edges.size());

    // Reattach bridges in edge order.  Each bar end can slide into any gap of
    // the rotation already assembled at its vertex; an end at a so-far bare
    // vertex has exactly one way in.
    std::vector<int> parent(piece_gd.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&parent](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    std::sort(bridge_edges.begin(), bridge_edges.end());
    for (EdgeId eid : bridge_edges) {
        const Edge& e = g.edge(eid);
        const int ru = find(piece_of[static_cast<size_t>(e.u)]);
        const int rv = find(piece_of[static_cast<size_t>(e.v)]);
        if (ru == rv) throw InternalError("bridge joins a piece to itself");
        const BigInt scalar = BigInt(std::max(rotation_size[static_cast<size_t>(e.u)], 1)) *
                              std::max(rotation_size[static_cast<size_t>(e.v)], 1);
        piece_gd[static_cast<size_t>(ru)] =
            gd_scale(gd_convolve(piece_gd[static_cast<size_t>(ru)],
                                 piece_gd[static_cast<size_t>(rv)]),
                     scalar);
        parent[static_cast<size_t>(rv)] = ru;
        trace.scalar_product *= scalar;
        ++rotation_size[static_cast<size_t>(e.u)];
        ++rotation_size[static_cast<size_t>(e.v)];
    }

    const int root = find(0);
    for (size_t i = 0; i < piece_gd.size(); ++i)
        if (find(static_cast<int>(i)) != root)
            throw InternalError("assembly left more than one piece");
    report.gd = piece_gd[static_cast<size_t>(root)];
    report.timings.evaluate_seconds = seconds_since(t2);

    report.assembly = std::move(trace);
    check_result(g, report.gd);
    report.timings.total_seconds = seconds_since(t0);
    return report;
}

ComputationReport gd_auto(const Multigraph& g,
                          std::optional<std::pair<Vertex, Vertex>> terminals) {
    if (g.max_degree() > 3)
        throw ValidationError("a vertex has degree " + std::to_string(g.max_degree()) +
                              "; only degrees up to 3 are supported");
    if (!is_treewidth_at_most_2(g))
        throw ValidationError("the graph has a K4-minor (treewidth greater than 2)");
    const bool cubic_biconnected =
        g.is_regular(3) && block_decomposition(g).blocks.size() == 1;
    if (cubic_biconnected) return gd_cubic_biconnected_sp(g, terminals);
    if (terminals)
        throw ValidationError("terminals can only be chosen for a cubic biconnected graph");
    return gd_treewidth2_maxdeg3(g);
}

} // namespace spgenus
