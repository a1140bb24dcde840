#include "spgenus/multigraph.hpp"

#include <algorithm>
#include <sstream>
#include <stack>
#include <unordered_map>

namespace spgenus {

void Multigraph::rebuild_incidence() {
    incidence_.assign(static_cast<size_t>(num_vertices_), {});
    for (const Edge& e : edges_) {
        incidence_[static_cast<size_t>(e.u)].push_back(e.id);
        incidence_[static_cast<size_t>(e.v)].push_back(e.id);
    }
}

Multigraph Multigraph::from_edges(int num_vertices,
                                  const std::vector<std::pair<Vertex, Vertex>>& endpoints) {
    Multigraph g;
    g.num_vertices_ = num_vertices;
    g.edges_.reserve(endpoints.size());
    for (const auto& [u, v] : endpoints) {
        if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
            throw InternalError("edge endpoint out of range");
        if (u == v)
            throw InternalError("self-loop rejected");
        g.edges_.push_back(Edge{static_cast<EdgeId>(g.edges_.size()), u, v});
    }
    g.labels_.reserve(static_cast<size_t>(num_vertices));
    for (int v = 0; v < num_vertices; ++v)
        g.labels_.push_back(std::to_string(v));
    g.rebuild_incidence();
    return g;
}

int Multigraph::max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < num_vertices_; ++v)
        d = std::max(d, degree(v));
    return d;
}

std::vector<int> Multigraph::degree_histogram() const {
    std::vector<int> hist(static_cast<size_t>(max_degree()) + 1, 0);
    for (Vertex v = 0; v < num_vertices_; ++v)
        ++hist[static_cast<size_t>(degree(v))];
    return hist;
}

bool Multigraph::is_regular(int d) const {
    for (Vertex v = 0; v < num_vertices_; ++v)
        if (degree(v) != d)
            return false;
    return num_vertices_ > 0;
}

int Multigraph::num_components() const {
    if (num_vertices_ == 0)
        return 0;
    std::vector<char> seen(static_cast<size_t>(num_vertices_), 0);
    int components = 0;
    for (Vertex start = 0; start < num_vertices_; ++start) {
        if (seen[static_cast<size_t>(start)])
            continue;
        ++components;
        std::stack<Vertex> todo;
        todo.push(start);
        seen[static_cast<size_t>(start)] = 1;
        while (!todo.empty()) {
            Vertex v = todo.top();
            todo.pop();
            for (EdgeId e : incident_edges(v)) {
                Vertex w = edge(e).other(v);
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    todo.push(w);
                }
            }
        }
    }
    return components;
}

int Multigraph::multiplicity(Vertex a, Vertex b) const {
    int count = 0;
    for (EdgeId e : incident_edges(a))
        if (edge(e).other(a) == b)
            ++count;
    return count;
}

Multigraph Multigraph::canonicalized() const {
    std::vector<Vertex> remap(static_cast<size_t>(num_vertices_), -1);
    int next = 0;
    std::vector<std::pair<Vertex, Vertex>> endpoints;
    endpoints.reserve(edges_.size());
    for (const Edge& e : edges_) {
        for (Vertex w : {e.u, e.v})
            if (remap[static_cast<size_t>(w)] < 0)
                remap[static_cast<size_t>(w)] = next++;
        endpoints.emplace_back(remap[static_cast<size_t>(e.u)], remap[static_cast<size_t>(e.v)]);
    }
    if (next != num_vertices_)
        throw InternalError("canonicalized: isolated vertex has no edge-list representation");
    return from_edges(num_vertices_, endpoints);
}

std::optional<Vertex> Multigraph::vertex_by_label(const std::string& label) const {
    for (Vertex v = 0; v < num_vertices_; ++v)
        if (labels_[static_cast<size_t>(v)] == label)
            return v;
    return std::nullopt;
}

Multigraph parse_graph(const std::string& text) {
    Multigraph g;
    std::unordered_map<std::string, Vertex> ids;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a))
            continue; // blank or comment-only line
        if (!(fields >> b) || (fields >> extra))
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected exactly two vertex labels");
        if (a == b)
            throw ParseError("line " + std::to_string(lineno) + ": self-loop '" + a + " " + b +
                             "' rejected");
        auto intern = [&](const std::string& label) {
            auto [it, inserted] = ids.emplace(label, static_cast<Vertex>(g.labels_.size()));
            if (inserted)
                g.labels_.push_back(label);
            return it->second;
        };
        const Vertex u = intern(a);
        const Vertex v = intern(b);
        g.edges_.push_back(Edge{static_cast<EdgeId>(g.edges_.size()), u, v});
    }
    if (g.edges_.empty())
        throw ParseError("document contains no edges");
    g.num_vertices_ = static_cast<int>(g.labels_.size());
    g.rebuild_incidence();
    if (!g.is_connected())
        throw ValidationError("graph is disconnected");
    return g;
}

std::string serialize_graph(const Multigraph& g) {
    std::ostringstream out;
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

bool BlockDecomposition::is_bridge(int block_index) const {
    return std::find(bridges.begin(), bridges.end(), block_index) != bridges.end();
}

namespace {

// Iterative Hopcroft-Tarjan over edge ids, so parallel edges land in the
// same block instead of being mistaken for the tree edge back to the parent.
struct BlockFinder {
    const Multigraph& g;
    std::vector<int> num, low;
    std::vector<char> is_cut;
    std::vector<EdgeId> edge_stack;
    std::vector<char> edge_seen;
    BlockDecomposition result;
    int counter = 0;

    explicit BlockFinder(const Multigraph& graph)
        : g(graph),
          num(static_cast<size_t>(graph.num_vertices()), -1),
          low(static_cast<size_t>(graph.num_vertices()), 0),
          is_cut(static_cast<size_t>(graph.num_vertices()), 0),
          edge_seen(static_cast<size_t>(graph.num_edges()), 0) {}

    void pop_block(EdgeId until_edge) {
        std::vector<EdgeId> block;
        while (true) {
            EdgeId e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == until_edge)
                break;
        }
        std::sort(block.begin(), block.end());
        result.blocks.push_back(std::move(block));
    }

    struct Frame {
        Vertex v;
        EdgeId via; // tree edge used to enter v, -1 at the root
        size_t next_index = 0;
        int children = 0;
    };

    void run(Vertex root) {
        std::vector<Frame> stack;
        num[static_cast<size_t>(root)] = counter++;
        stack.push_back(Frame{root, -1});
        low[static_cast<size_t>(root)] = num[static_cast<size_t>(root)];
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& inc = g.incident_edges(f.v);
            if (f.next_index < inc.size()) {
                EdgeId e = inc[f.next_index++];
                if (e == f.via || edge_seen[static_cast<size_t>(e)])
                    continue;
                edge_seen[static_cast<size_t>(e)] = 1;
                edge_stack.push_back(e);
                Vertex w = g.edge(e).other(f.v);
                if (num[static_cast<size_t>(w)] < 0) {
                    ++f.children;
                    num[static_cast<size_t>(w)] = counter++;
                    low[static_cast<size_t>(w)] = num[static_cast<size_t>(w)];
                    stack.push_back(Frame{w, e});
                } else {
                    low[static_cast<size_t>(f.v)] =
                        std::min(low[static_cast<size_t>(f.v)], num[static_cast<size_t>(w)]);
                }
            } else {
                const Frame done = f; // copy before pop invalidates the reference
                stack.pop_back();
                if (stack.empty())
                    break;
                Frame& parent = stack.back();
                low[static_cast<size_t>(parent.v)] =
                    std::min(low[static_cast<size_t>(parent.v)], low[static_cast<size_t>(done.v)]);
                if (low[static_cast<size_t>(done.v)] >= num[static_cast<size_t>(parent.v)]) {
                    // parent closes a block; it is a cut vertex unless it is
                    // the root with a single child
                    if (stack.size() > 1 || parent.children > 1)
                        is_cut[static_cast<size_t>(parent.v)] = 1;
                    pop_block(done.via);
                }
            }
        }
    }
};

} // namespace

BlockDecomposition block_decomposition(const Multigraph& g) {
    if (!g.is_connected())
        throw ValidationError("block decomposition requires a connected graph");
    BlockFinder finder(g);
    finder.run(0);
    BlockDecomposition dec = std::move(finder.result);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (finder.is_cut[static_cast<size_t>(v)])
            dec.cut_vertices.insert(v);
    for (int b = 0; b < static_cast<int>(dec.blocks.size()); ++b)
        if (dec.blocks[static_cast<size_t>(b)].size() == 1)
            dec.bridges.push_back(b);
    dec.blocks_of_vertex.assign(static_cast<size_t>(g.num_vertices()), {});
    for (int b = 0; b < static_cast<int>(dec.blocks.size()); ++b) {
        std::set<Vertex> verts;
        for (EdgeId e : dec.blocks[static_cast<size_t>(b)]) {
            verts.insert(g.edge(e).u);
            verts.insert(g.edge(e).v);
        }
        for (Vertex v : verts)
            dec.blocks_of_vertex[static_cast<size_t>(v)].push_back(b);
    }
    return dec;
}

std::variant<Multigraph, CycleMarker> smooth_degree2(const Multigraph& g) {
    if (!g.is_connected())
        throw ValidationError("smoothing requires a connected graph");
    // mutable working copy as endpoint pairs; -1 marks a deleted edge
    std::vector<std::pair<Vertex, Vertex>> work;
    work.reserve(static_cast<size_t>(g.num_edges()));
    for (const Edge& e : g.edges())
        work.emplace_back(e.u, e.v);
    std::vector<int> deg(static_cast<size_t>(g.num_vertices()), 0);
    for (const auto& [u, v] : work) {
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
    }
    std::vector<char> alive(static_cast<size_t>(g.num_vertices()), 1);
    int alive_count = g.num_vertices();

    auto edges_at = [&](Vertex v) {
        std::vector<int> ids;
        for (int i = 0; i < static_cast<int>(work.size()); ++i)
            if (work[static_cast<size_t>(i)].first == v || work[static_cast<size_t>(i)].second == v)
                ids.push_back(i);
        return ids;
    };

    while (true) {
        Vertex u = -1;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (alive[static_cast<size_t>(v)] && deg[static_cast<size_t>(v)] == 2) {
                u = v;
                break;
            }
        if (u < 0)
            break;
        auto ids = edges_at(u);
        if (ids.size() != 2)
            throw InternalError("degree bookkeeping out of sync");
        Vertex a = work[static_cast<size_t>(ids[0])].first == u
                       ? work[static_cast<size_t>(ids[0])].second
                       : work[static_cast<size_t>(ids[0])].first;
        Vertex b = work[static_cast<size_t>(ids[1])].first == u
                       ? work[static_cast<size_t>(ids[1])].second
                       : work[static_cast<size_t>(ids[1])].first;
        if (a == b) {
            if (alive_count == 2)
                return CycleMarker{};
            // a doubled pendant; smoothing would create a self-loop
            throw ValidationError("smoothing would create a self-loop");
        }
        // replace the path a-u-b by edge a-b
        work[static_cast<size_t>(ids[0])] = {a, b};
        work[static_cast<size_t>(ids[1])] = {-1, -1};
        alive[static_cast<size_t>(u)] = 0;
        --alive_count;
        deg[static_cast<size_t>(u)] = 0;
    }

    std::vector<Vertex> remap(static_cast<size_t>(g.num_vertices()), -1);
    int next = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (alive[static_cast<size_t>(v)])
            remap[static_cast<size_t>(v)] = next++;
    std::vector<std::pair<Vertex, Vertex>> endpoints;
    for (const auto& [u, v] : work)
        if (u >= 0)
            endpoints.emplace_back(remap[static_cast<size_t>(u)], remap[static_cast<size_t>(v)]);
    return Multigraph::from_edges(next, endpoints);
}

bool is_treewidth_at_most_2(const Multigraph& g) {
    std::vector<std::pair<Vertex, Vertex>> work;
    for (const Edge& e : g.edges())
        work.emplace_back(e.u, e.v);
    std::vector<char> alive(static_cast<size_t>(g.num_vertices()), 1);
    int alive_count = g.num_vertices();

    auto degrees = [&] {
        std::vector<int> deg(static_cast<size_t>(g.num_vertices()), 0);
        for (const auto& [u, v] : work) {
            ++deg[static_cast<size_t>(u)];
            ++deg[static_cast<size_t>(v)];
        }
        return deg;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        // delete one of two parallel edges
        std::map<std::pair<Vertex, Vertex>, int> first_seen;
        for (int i = 0; i < static_cast<int>(work.size()); ++i) {
            auto key = std::minmax(work[static_cast<size_t>(i)].first,
                                   work[static_cast<size_t>(i)].second);
            auto [it, inserted] = first_seen.emplace(key, i);
            if (!inserted) {
                work.erase(work.begin() + i);
                changed = true;
                break;
            }
        }
        if (changed)
            continue;
        auto deg = degrees();
        // delete a degree-<=1 vertex (keep the last surviving vertex)
        for (Vertex v = 0; v < g.num_vertices() && !changed; ++v) {
            if (!alive[static_cast<size_t>(v)] || deg[static_cast<size_t>(v)] > 1)
                continue;
            if (deg[static_cast<size_t>(v)] == 0 && alive_count == 1)
                continue;
            std::erase_if(work, [v](const auto& e) { return e.first == v || e.second == v; });
            alive[static_cast<size_t>(v)] = 0;
            --alive_count;
            changed = true;
        }
        if (changed)
            continue;
        // suppress a degree-2 vertex; neighbors are distinct because no
        // parallel pair survived the first rule
        for (Vertex v = 0; v < g.num_vertices() && !changed; ++v) {
            if (!alive[static_cast<size_t>(v)] || deg[static_cast<size_t>(v)] != 2)
                continue;
            std::vector<int> ids;
            for (int i = 0; i < static_cast<int>(work.size()); ++i)
                if (work[static_cast<size_t>(i)].first == v ||
                    work[static_cast<size_t>(i)].second == v)
                    ids.push_back(i);
            Vertex a = work[static_cast<size_t>(ids[0])].first == v
                           ? work[static_cast<size_t>(ids[0])].second
                           : work[static_cast<size_t>(ids[0])].first;
            Vertex b = work[static_cast<size_t>(ids[1])].first == v
                           ? work[static_cast<size_t>(ids[1])].second
                           : work[static_cast<size_t>(ids[1])].first;
            work[static_cast<size_t>(ids[0])] = {a, b};
            work.erase(work.begin() + ids[1]);
            alive[static_cast<size_t>(v)] = 0;
            --alive_count;
            changed = true;
        }
    }
    return work.empty();
}

} // namespace spgenus
