#ifndef SPGENUS_TEST_SUPPORT_HPP
#define SPGENUS_TEST_SUPPORT_HPP

// Graph-construction helpers shared by the test binaries.  Everything here
// builds *physical* graphs (edge lists) so tests can drive the public
// pipeline end to end instead of poking at internals.

#include <random>
#include <utility>
#include <vector>

#include "spgenus/decompose.hpp"
#include "spgenus/multigraph.hpp"

namespace spgenus::testing {

inline DmtExpression k2() { return DmtExpression::leaf(); }
inline DmtExpression par(DmtExpression a, DmtExpression b) {
    return DmtExpression::parallel(std::move(a), std::move(b));
}
inline DmtExpression ser(DmtExpression a, DmtExpression b) {
    std::vector<DmtExpression> parts;
    parts.push_back(std::move(a));
    parts.push_back(std::move(b));
    return DmtExpression::series(std::move(parts));
}

// An edge list under construction, with the two string roots tracked.
struct BuiltString {
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    int p = -1;
    int q = -1;
};

// Appends s to dst, mapping s's roots onto the given existing vertices and
// giving every interior vertex a fresh id.
inline void splice(BuiltString& dst, const BuiltString& s, int onto_p, int onto_q) {
    std::vector<int> map(static_cast<size_t>(s.n), -1);
    map[static_cast<size_t>(s.p)] = onto_p;
    map[static_cast<size_t>(s.q)] = onto_q;
    for (int v = 0; v < s.n; ++v)
        if (map[static_cast<size_t>(v)] < 0) map[static_cast<size_t>(v)] = dst.n++;
    for (auto [u, v] : s.edges)
        dst.edges.emplace_back(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]);
}

// Physical realization of a string expression: a K2 leaf is a single edge;
// a parallel node merges both root pairs and hangs a fresh spike at each
// merged vertex; a series node merges adjacent roots and smooths the seam.
inline BuiltString realize_expression(const DmtExpression& e) {
    if (e.kind == DmtExpression::Kind::K2) {
        BuiltString s;
        s.n = 2;
        s.p = 0;
        s.q = 1;
        s.edges.emplace_back(0, 1);
        return s;
    }
    if (e.kind == DmtExpression::Kind::ModParallel) {
        BuiltString out;
        out.n = 2; // 0 and 1 are the merged former roots
        splice(out, realize_expression(e.children[0]), 0, 1);
        splice(out, realize_expression(e.children[1]), 0, 1);
        out.p = out.n++;
        out.q = out.n++;
        out.edges.emplace_back(0, out.p);
        out.edges.emplace_back(1, out.q);
        return out;
    }
    // series: fold left, smoothing each seam
    BuiltString acc = realize_expression(e.children[0]);
    for (size_t i = 1; i < e.children.size(); ++i) {
        BuiltString out;
        out.n = 3; // 0 = new p, 1 = new q, 2 = seam to smooth away
        splice(out, acc, 0, 2);
        splice(out, realize_expression(e.children[i]), 2, 1);
        int left = -1, right = -1;
        std::vector<std::pair<int, int>> kept;
        for (auto [u, v] : out.edges) {
            if (u == 2 || v == 2)
                (left < 0 ? left : right) = (u == 2 ? v : u);
            else
                kept.emplace_back(u, v);
        }
        kept.emplace_back(left, right);
        for (auto& [u, v] : kept) { // drop the seam id
            if (u > 2) --u;
            if (v > 2) --v;
        }
        out.edges = std::move(kept);
        out.n -= 1;
        out.p = 0;
        out.q = 1;
        acc = std::move(out);
    }
    return acc;
}

inline RootedString realize_string(const DmtExpression& e) {
    const BuiltString b = realize_expression(e);
    return {Multigraph::from_edges(b.n, b.edges), b.p, b.q};
}

// Closes three string expressions into a cubic graph: all three source roots
// merge into vertex 0, all three target roots into vertex 1.  Edges arrive
// strand by strand, so the pipeline visits the strands in argument order.
inline Multigraph merge_strands(const DmtExpression& a, const DmtExpression& b,
                                const DmtExpression& c) {
    BuiltString g;
    g.n = 2;
    for (const DmtExpression* e : {&a, &b, &c}) splice(g, realize_expression(*e), 0, 1);
    return Multigraph::from_edges(g.n, g.edges);
}

inline Multigraph subdivide_edge(const Multigraph& g, EdgeId e) {
    const Vertex w = g.num_vertices();
    std::vector<std::pair<Vertex, Vertex>> endpoints;
    for (const Edge& f : g.edges()) {
        if (f.id == e) {
            endpoints.emplace_back(f.u, w);
            endpoints.emplace_back(w, f.v);
        } else {
            endpoints.emplace_back(f.u, f.v);
        }
    }
    return Multigraph::from_edges(g.num_vertices() + 1, endpoints);
}

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n; // test-only; slight modulo bias is irrelevant here
}

// Same graph, new clothes: random vertex relabeling and random edge order.
// Used to check that results do not depend on incidental id choices.
inline Multigraph reshuffled(const Multigraph& g, std::mt19937_64& rng) {
    std::vector<Vertex> perm(static_cast<size_t>(g.num_vertices()));
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Vertex>(i);
    for (size_t i = perm.size(); i > 1; --i)
        std::swap(perm[i - 1], perm[draw(rng, i)]);
    std::vector<std::pair<Vertex, Vertex>> endpoints;
    for (const Edge& e : g.edges())
        endpoints.emplace_back(perm[static_cast<size_t>(e.u)], perm[static_cast<size_t>(e.v)]);
    for (size_t i = endpoints.size(); i > 1; --i)
        std::swap(endpoints[i - 1], endpoints[draw(rng, i)]);
    return Multigraph::from_edges(g.num_vertices(), endpoints);
}

// Random connected graph with max degree <= 3 and treewidth <= 2, in the
// style the general pipeline exists for: a handful of small pieces (cubic
// series-parallel blocks, paths, short cycles) strung together by bridges,
// with some extra subdivisions thrown in.  Never exceeds 16 trivalent
// vertices, so the brute-force oracle stays cheap.
inline Multigraph random_tw2_instance(std::mt19937_64& rng) {
    struct Assembly {
        std::vector<std::pair<int, int>> edges;
        std::vector<int> degree;

        int add_vertex() {
            degree.push_back(0);
            return static_cast<int>(degree.size()) - 1;
        }
        void add_edge(int u, int v) {
            edges.emplace_back(u, v);
            ++degree[static_cast<size_t>(u)];
            ++degree[static_cast<size_t>(v)];
        }
        int splice_graph(const Multigraph& g) {
            const int offset = static_cast<int>(degree.size());
            for (int i = 0; i < g.num_vertices(); ++i) add_vertex();
            for (const Edge& e : g.edges()) add_edge(offset + e.u, offset + e.v);
            return offset;
        }
        std::vector<int> open_vertices() const {
            std::vector<int> out;
            for (size_t v = 0; v < degree.size(); ++v)
                if (degree[v] < 3) out.push_back(static_cast<int>(v));
            return out;
        }
    };

    Assembly a;
    const int pieces = 1 + static_cast<int>(draw(rng, 3));
    int tau_budget = 3; // keeps the trivalent count within oracle reach
    for (int i = 0; i < pieces; ++i) {
        const int first_new = static_cast<int>(a.degree.size());
        switch (draw(rng, 3)) {
        case 0: { // cubic series-parallel block, subdivided so bridges can land on it
            const int steps = static_cast<int>(draw(rng, static_cast<std::uint64_t>(tau_budget) + 1));
            tau_budget -= steps;
            Multigraph block = random_cubic_sp(steps, rng());
            const int cuts = 2 + static_cast<int>(draw(rng, 2));
            for (int s = 0; s < cuts; ++s)
                block = subdivide_edge(block, static_cast<EdgeId>(draw(
                                                  rng, static_cast<std::uint64_t>(block.num_edges()))));
            a.splice_graph(block);
            break;
        }
        case 1: { // path
            int prev = a.add_vertex();
            const int len = 1 + static_cast<int>(draw(rng, 4));
            for (int s = 0; s < len; ++s) {
                const int next = a.add_vertex();
                a.add_edge(prev, next);
                prev = next;
            }
            break;
        }
        default: { // cycle (length 2 is a doubled edge, which is fine)
            const int len = 2 + static_cast<int>(draw(rng, 4));
            const int start = a.add_vertex();
            int prev = start;
            for (int s = 1; s < len; ++s) {
                const int next = a.add_vertex();
                a.add_edge(prev, next);
                prev = next;
            }
            a.add_edge(prev, start);
            break;
        }
        }
        if (i > 0) {
            // bridge the new piece to the existing assembly
            std::vector<int> old_open, new_open;
            for (int v : a.open_vertices())
                (v < first_new ? old_open : new_open).push_back(v);
            a.add_edge(old_open[draw(rng, old_open.size())],
                       new_open[draw(rng, new_open.size())]);
        }
    }
    Multigraph g = Multigraph::from_edges(static_cast<int>(a.degree.size()), a.edges);
    const int extra = static_cast<int>(draw(rng, 3));
    for (int s = 0; s < extra; ++s)
        g = subdivide_edge(g, static_cast<EdgeId>(draw(rng, static_cast<std::uint64_t>(g.num_edges()))));
    return g;
}

} // namespace spgenus::testing

#endif
