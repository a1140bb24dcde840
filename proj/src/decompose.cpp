#include "spgenus/decompose.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "spgenus/productions.hpp"

namespace spgenus {

namespace {

[[noreturn]] void not_a_string(const std::string& why) {
    throw ValidationError("not a dmt-string: " + why);
}

// Unbiased index in [0, n) from raw 64-bit draws.  std::uniform_int_distribution
// is implementation-defined, which would make generated instances differ across
// standard libraries; rejection sampling keeps (tau_steps, seed) reproducible.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t bound = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t x = rng();
    while (x > bound) x = rng();
    return x % n;
}

DmtExpression parse_rooted(const Multigraph& g, Vertex src, Vertex dst);

// Decomposes one nontrivial block into its two parallel sides.  The gates are
// the block's entry and exit on the spine; removing them must leave the block
// as two direct gate-gate edges, one direct edge plus one side component, or
// two side components, each side component tied to each gate by exactly one
// edge.  Each side becomes a rooted string (fresh univalent roots standing in
// for the gates) and is parsed recursively.
DmtExpression parse_block(const Multigraph& g, const std::vector<EdgeId>& block_edges,
                          Vertex entry, Vertex exit) {
    int direct = 0; // gate-to-gate edges
    std::map<Vertex, std::vector<EdgeId>> adj; // block-local incidence, non-gate vertices
    for (EdgeId eid : block_edges) {
        const Edge& e = g.edge(eid);
        const bool u_gate = e.u == entry || e.u == exit;
        const bool v_gate = e.v == entry || e.v == exit;
        if (u_gate && v_gate) {
            if (e.u == e.v || (e.u == entry) == (e.v == entry)) not_a_string("block edge joins a gate to itself");
            ++direct;
            continue;
        }
        if (!u_gate) adj[e.u].push_back(eid);
        if (!v_gate) adj[e.v].push_back(eid);
    }

    // Components of the block minus its gates, in ascending order of their
    // smallest vertex (adj is id-ordered, so the scan below does that).
    std::set<Vertex> seen;
    std::vector<DmtExpression> sides(static_cast<size_t>(direct), DmtExpression::leaf());
    for (const auto& [start, unused] : adj) {
        if (seen.count(start)) continue;
        std::vector<Vertex> comp;
        std::vector<EdgeId> comp_edges;
        std::vector<Vertex> stack{start};
        seen.insert(start);
        std::set<EdgeId> comp_edge_set;
        while (!stack.empty()) {
            Vertex w = stack.back();
            stack.pop_back();
            comp.push_back(w);
            for (EdgeId eid : adj.at(w)) {
                if (!comp_edge_set.insert(eid).second) continue;
                comp_edges.push_back(eid);
                Vertex o = g.edge(eid).other(w);
                if (o == entry || o == exit) continue;
                if (seen.insert(o).second) stack.push_back(o);
            }
        }
        // Reconstruct the side as its own string: component vertices keep
        // their relative order, then a fresh root per gate.
        std::sort(comp.begin(), comp.end());
        std::sort(comp_edges.begin(), comp_edges.end());
        std::map<Vertex, Vertex> remap;
        for (Vertex w : comp) remap[w] = static_cast<Vertex>(remap.size());
        const Vertex side_src = static_cast<Vertex>(comp.size());
        const Vertex side_dst = side_src + 1;
        int to_entry = 0, to_exit = 0;
        std::vector<std::pair<Vertex, Vertex>> endpoints;
        for (EdgeId eid : comp_edges) {
            const Edge& e = g.edge(eid);
            Vertex a = e.u, b = e.v;
            if (a == entry || a == exit) std::swap(a, b);
            if (b == entry) {
                ++to_entry;
                endpoints.emplace_back(remap.at(a), side_src);
            } else if (b == exit) {
                ++to_exit;
                endpoints.emplace_back(remap.at(a), side_dst);
            } else {
                endpoints.emplace_back(remap.at(a), remap.at(b));
            }
        }
        if (to_entry != 1 || to_exit != 1)
            not_a_string("a block side must meet each gate by exactly one edge");
        RootedString side{Multigraph::from_edges(side_dst + 1, endpoints), side_src, side_dst};
        sides.push_back(parse_dmt_string(side));
    }

    if (sides.size() != 2) not_a_string("a block must split into exactly two parallel sides");
    return DmtExpression::parallel(std::move(sides[0]), std::move(sides[1]));
}

DmtExpression parse_rooted(const Multigraph& g, Vertex src, Vertex dst) {
    if (g.num_edges() == 1) return DmtExpression::leaf();

    const BlockDecomposition bd = block_decomposition(g);
    for (Vertex c : bd.cut_vertices)
        if (bd.blocks_of_vertex[static_cast<size_t>(c)].size() != 2)
            not_a_string("spine branches at a cut vertex");

    // Walk the spine from src; each bridge hands over to the next block
    // through a cut vertex, each nontrivial block contributes one parallel
    // factor.  The walk must consume every block and end at dst.
    std::vector<DmtExpression> factors;
    std::vector<char> used(bd.blocks.size(), 0);
    Vertex at = src;
    int bi = bd.blocks_of_vertex[static_cast<size_t>(src)].at(0);
    size_t consumed = 0;
    for (;;) {
        if (used[static_cast<size_t>(bi)]) not_a_string("spine revisits a block");
        used[static_cast<size_t>(bi)] = 1;
        ++consumed;
        Vertex out;
        if (bd.is_bridge(bi)) {
            out = g.edge(bd.blocks[static_cast<size_t>(bi)][0]).other(at);
        } else {
            // Gates = the block's cut vertices; univalent roots cannot sit in
            // a nontrivial block, so entry and exit are both cut vertices.
            std::set<Vertex> gates;
            for (EdgeId eid : bd.blocks[static_cast<size_t>(bi)]) {
                const Edge& e = g.edge(eid);
                if (bd.cut_vertices.count(e.u)) gates.insert(e.u);
                if (bd.cut_vertices.count(e.v)) gates.insert(e.v);
            }
            if (gates.size() != 2 || !gates.count(at))
                not_a_string("a block must have exactly two gates on the spine");
            out = *gates.begin() == at ? *gates.rbegin() : *gates.begin();
            factors.push_back(parse_block(g, bd.blocks[static_cast<size_t>(bi)], at, out));
        }
        if (out == dst) break;
        const auto& next_blocks = bd.blocks_of_vertex[static_cast<size_t>(out)];
        if (next_blocks.size() != 2) not_a_string("spine stops before the far root");
        bi = next_blocks[0] == bi ? next_blocks[1] : next_blocks[0];
        at = out;
    }
    if (consumed != bd.blocks.size()) not_a_string("blocks left over beside the spine");

    if (factors.empty()) throw InternalError("multi-edge string parsed to no factors");
    if (factors.size() == 1) return std::move(factors[0]);
    return DmtExpression::series(std::move(factors));
}

} // namespace

void RootedString::validate() const {
    const int n = graph.num_vertices();
    if (source_root < 0 || source_root >= n || target_root < 0 || target_root >= n)
        not_a_string("root out of range");
    if (source_root == target_root) not_a_string("roots coincide");
    if (!graph.is_connected()) not_a_string("string is disconnected");
    for (Vertex v = 0; v < n; ++v) {
        const int want = (v == source_root || v == target_root) ? 1 : 3;
        if (graph.degree(v) != want)
            not_a_string(want == 1 ? "a root is not univalent"
                                   : "an interior vertex is not trivalent");
    }
}

DmtExpression DmtExpression::parallel(DmtExpression a, DmtExpression b) {
    DmtExpression e;
    e.kind = Kind::ModParallel;
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
}

DmtExpression DmtExpression::series(std::vector<DmtExpression> parts) {
    if (parts.size() < 2) throw InternalError("series node needs at least two parts");
    DmtExpression e;
    e.kind = Kind::ModSeries;
    e.children = std::move(parts);
    return e;
}

int DmtExpression::leaf_count() const {
    if (kind == Kind::K2) return 1;
    int n = 0;
    for (const DmtExpression& c : children) n += c.leaf_count();
    return n;
}

Multigraph dipole(int n) {
    if (n < 1) throw ValidationError("dipole needs at least one edge");
    std::vector<std::pair<Vertex, Vertex>> endpoints(static_cast<size_t>(n), {0, 1});
    return Multigraph::from_edges(2, endpoints);
}

Multigraph apply_tau(const Multigraph& g, EdgeId e) {
    if (e < 0 || e >= g.num_edges()) throw ValidationError("dmt-step on a missing edge");
    const Edge target = g.edge(e);
    const Vertex x = g.num_vertices();
    const Vertex y = x + 1;
    std::vector<std::pair<Vertex, Vertex>> endpoints;
    endpoints.reserve(static_cast<size_t>(g.num_edges()) + 3);
    for (const Edge& f : g.edges())
        if (f.id != e) endpoints.emplace_back(f.u, f.v);
    endpoints.emplace_back(target.u, x);
    endpoints.emplace_back(x, y);
    endpoints.emplace_back(x, y);
    endpoints.emplace_back(y, target.v);
    return Multigraph::from_edges(g.num_vertices() + 2, endpoints);
}

DipoleReduction reduce_to_dipole(const Multigraph& g) {
    if (!g.is_regular(3)) return {false, {}, g};
    Multigraph cur = g;
    std::vector<TauInverseStep> steps;
    for (;;) {
        if (cur.num_vertices() == 2) return {true, std::move(steps), std::nullopt};

        // Lowest pair joined by exactly two edges; a triple pair only occurs
        // in the dipole itself, which the exit above already caught.
        std::optional<std::pair<Vertex, Vertex>> pick;
        for (const Edge& e : cur.edges()) {
            const auto p = std::minmax(e.u, e.v);
            const std::pair<Vertex, Vertex> cand{p.first, p.second};
            if ((!pick || cand < *pick) && cur.multiplicity(cand.first, cand.second) == 2)
                pick = cand;
        }
        if (!pick) return {false, std::move(steps), cur};
        const auto [a, b] = *pick;

        Vertex na = -1, nb = -1;
        for (EdgeId eid : cur.incident_edges(a))
            if (Vertex w = cur.edge(eid).other(a); w != b) na = w;
        for (EdgeId eid : cur.incident_edges(b))
            if (Vertex w = cur.edge(eid).other(b); w != a) nb = w;
        if (na < 0 || nb < 0 || na == nb) {
            // Deleting one doubled edge and smoothing would close a loop.
            return {false, std::move(steps), cur};
        }
        steps.push_back({a, b});

        std::vector<Vertex> remap(static_cast<size_t>(cur.num_vertices()), -1);
        Vertex next = 0;
        for (Vertex v = 0; v < cur.num_vertices(); ++v)
            if (v != a && v != b) remap[static_cast<size_t>(v)] = next++;
        std::vector<std::pair<Vertex, Vertex>> endpoints;
        endpoints.reserve(static_cast<size_t>(cur.num_edges()) - 3);
        for (const Edge& e : cur.edges())
            if (e.u != a && e.u != b && e.v != a && e.v != b)
                endpoints.emplace_back(remap[static_cast<size_t>(e.u)],
                                       remap[static_cast<size_t>(e.v)]);
        endpoints.emplace_back(remap[static_cast<size_t>(na)], remap[static_cast<size_t>(nb)]);
        cur = Multigraph::from_edges(next, endpoints);
    }
}

std::array<RootedString, 3> split_into_strands(const Multigraph& g, Vertex p, Vertex q) {
    const int n = g.num_vertices();
    if (p < 0 || p >= n || q < 0 || q >= n || p == q)
        throw ValidationError("invalid terminal pair: need two distinct vertices");
    if (g.degree(p) != 3 || g.degree(q) != 3)
        throw ValidationError("invalid terminal pair: terminals must be trivalent");

    // Copy i of p (in incident-edge order) gets id n+i; copies of q get n+3+i.
    // Copy creation order fixes the strand order below.
    std::map<std::pair<EdgeId, Vertex>, Vertex> end_copy;
    for (int i = 0; i < 3; ++i) {
        end_copy[{g.incident_edges(p)[static_cast<size_t>(i)], p}] = n + i;
        end_copy[{g.incident_edges(q)[static_cast<size_t>(i)], q}] = n + 3 + i;
    }
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(static_cast<size_t>(n) + 6);
    for (const Edge& e : g.edges()) {
        Vertex u = e.u == p || e.u == q ? end_copy.at({e.id, e.u}) : e.u;
        Vertex v = e.v == p || e.v == q ? end_copy.at({e.id, e.v}) : e.v;
        adj[static_cast<size_t>(u)].emplace_back(v, e.id);
        adj[static_cast<size_t>(v)].emplace_back(u, e.id);
    }

    std::vector<int> comp(static_cast<size_t>(n) + 6, -1);
    int ncomp = 0;
    for (int i = 0; i < 3; ++i) {
        const Vertex root = n + i;
        if (comp[static_cast<size_t>(root)] != -1)
            throw ValidationError("invalid terminal pair: strands are not disjoint");
        std::vector<Vertex> stack{root};
        comp[static_cast<size_t>(root)] = ncomp;
        while (!stack.empty()) {
            Vertex w = stack.back();
            stack.pop_back();
            for (auto [o, eid] : adj[static_cast<size_t>(w)])
                if (comp[static_cast<size_t>(o)] == -1) {
                    comp[static_cast<size_t>(o)] = ncomp;
                    stack.push_back(o);
                }
        }
        ++ncomp;
    }
    for (Vertex v = 0; v < n + 6; ++v)
        if (v != p && v != q && comp[static_cast<size_t>(v)] == -1)
            throw ValidationError("invalid terminal pair: splitting leaves more than three parts");
    for (int i = 0; i < 3; ++i) {
        int with_q = 0;
        for (int j = 0; j < 3; ++j)
            if (comp[static_cast<size_t>(n + 3 + j)] == i) ++with_q;
        if (with_q != 1)
            throw ValidationError("invalid terminal pair: a strand must hold one copy of each terminal");
    }

    std::array<RootedString, 3> out;
    for (int c = 0; c < 3; ++c) {
        std::map<Vertex, Vertex> remap;
        for (Vertex v = 0; v < n + 6; ++v)
            if (comp[static_cast<size_t>(v)] == c && v != p && v != q)
                remap[v] = static_cast<Vertex>(remap.size());
        std::vector<std::pair<Vertex, Vertex>> endpoints;
        std::set<EdgeId> taken;
        for (const auto& [v, unused] : remap)
            for (auto [o, eid] : adj[static_cast<size_t>(v)])
                if (taken.insert(eid).second) endpoints.emplace_back(remap.at(v), remap.at(o));
        RootedString s{Multigraph::from_edges(static_cast<int>(remap.size()), endpoints),
                       remap.at(n + c), -1};
        for (int j = 0; j < 3; ++j)
            if (comp[static_cast<size_t>(n + 3 + j)] == c) s.target_root = remap.at(n + 3 + j);
        s.validate();
        out[static_cast<size_t>(c)] = std::move(s);
    }
    return out;
}

bool terminals_valid(const Multigraph& g, Vertex p, Vertex q) {
    try {
        for (const RootedString& s : split_into_strands(g, p, q)) (void)parse_dmt_string(s);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

std::pair<Vertex, Vertex> find_terminals(const Multigraph& g) {
    std::set<std::pair<Vertex, Vertex>> adjacent;
    for (const Edge& e : g.edges()) {
        const auto p = std::minmax(e.u, e.v);
        adjacent.insert({p.first, p.second});
    }
    for (const auto& [a, b] : adjacent)
        if (terminals_valid(g, a, b)) return {a, b};
    for (Vertex a = 0; a < g.num_vertices(); ++a)
        for (Vertex b = a + 1; b < g.num_vertices(); ++b)
            if (!adjacent.count({a, b}) && terminals_valid(g, a, b)) return {a, b};
    throw ValidationError("no terminal pair splits the graph into three strings");
}

DmtExpression parse_dmt_string(const RootedString& s) {
    s.validate();
    return parse_rooted(s.graph, s.source_root, s.target_root);
}

UUPartials evaluate_expression(const DmtExpression& expr) {
    switch (expr.kind) {
    case DmtExpression::Kind::K2:
        return k2_pgd();
    case DmtExpression::Kind::ModParallel:
        return mod_parallel(evaluate_expression(expr.children[0]),
                            evaluate_expression(expr.children[1]));
    case DmtExpression::Kind::ModSeries: {
        UUPartials acc = evaluate_expression(expr.children[0]);
        for (size_t i = 1; i < expr.children.size(); ++i)
            acc = mod_series(acc, evaluate_expression(expr.children[i]));
        return acc;
    }
    }
    throw InternalError("unknown expression node");
}

UUPartials pgd_of_string(const RootedString& s) {
    return evaluate_expression(parse_dmt_string(s));
}

Multigraph random_cubic_sp(int tau_steps, std::uint64_t seed) {
    if (tau_steps < 0) throw ValidationError("the number of dmt-steps cannot be negative");
    std::mt19937_64 rng(seed);
    Multigraph cur = dipole(3);
    for (int i = 0; i < tau_steps; ++i)
        cur = apply_tau(cur, static_cast<EdgeId>(
                                 uniform_index(rng, static_cast<std::uint64_t>(cur.num_edges()))));
    return cur;
}

} // namespace spgenus
