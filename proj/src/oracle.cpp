#include "spgenus/oracle.hpp"

#include <algorithm>
#include <string>

namespace spgenus {

namespace {

inline int partner(int dart) { return dart ^ 1; }

inline Vertex dart_vertex(const Multigraph& g, int dart) {
    const Edge& e = g.edge(dart / 2);
    return dart % 2 == 0 ? e.u : e.v;
}

} // namespace

RotationSystem RotationSystem::identity(const Multigraph& g) {
    RotationSystem rot;
    rot.rotations.resize(static_cast<size_t>(g.num_vertices()));
    for (const Edge& e : g.edges()) {
        rot.rotations[static_cast<size_t>(e.u)].push_back(2 * e.id);
        rot.rotations[static_cast<size_t>(e.v)].push_back(2 * e.id + 1);
    }
    return rot;
}

void RotationSystem::validate(const Multigraph& g) const {
    if (static_cast<int>(rotations.size()) != g.num_vertices())
        throw InternalError("rotation system covers the wrong vertex count");
    std::vector<char> seen(static_cast<size_t>(2 * g.num_edges()), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (int d : rotations[static_cast<size_t>(v)]) {
            if (d < 0 || d >= 2 * g.num_edges() || dart_vertex(g, d) != v || seen[static_cast<size_t>(d)])
                throw InternalError("rotation system misplaces a dart");
            seen[static_cast<size_t>(d)] = 1;
        }
    }
    for (char s : seen)
        if (!s) throw InternalError("rotation system misses a dart");
}

int trace_faces(const Multigraph& g, const RotationSystem& rot) {
    const int ndarts = 2 * g.num_edges();
    // successor[d] = dart after d in the rotation at d's vertex
    std::vector<int> successor(static_cast<size_t>(ndarts), -1);
    for (const auto& cycle : rot.rotations)
        for (size_t i = 0; i < cycle.size(); ++i)
            successor[static_cast<size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];

    std::vector<char> visited(static_cast<size_t>(ndarts), 0);
    int faces = 0;
    for (int start = 0; start < ndarts; ++start) {
        if (visited[static_cast<size_t>(start)]) continue;
        ++faces;
        int d = start;
        do {
            visited[static_cast<size_t>(d)] = 1;
            d = successor[static_cast<size_t>(partner(d))];
        } while (d != start);
    }
    return faces;
}

int embedding_genus(const Multigraph& g, const RotationSystem& rot) {
    const int euler = g.num_vertices() - g.num_edges() + trace_faces(g, rot);
    if (euler % 2 != 0 || euler > 2)
        throw InternalError("impossible Euler characteristic " + std::to_string(euler));
    return (2 - euler) / 2;
}

BigInt count_rotation_systems(const Multigraph& g) {
    BigInt count = 1;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (int k = g.degree(v) - 1; k > 1; --k) count *= k;
    return count;
}

GenusDistribution gd_brute_force(const Multigraph& g, const BigInt& limit) {
    const BigInt census = count_rotation_systems(g);
    if (census > limit)
        throw LimitError("refusing to enumerate " + census.str() +
                         " rotation systems (limit " + limit.str() + ")");

    // Odometer over the permutable tail of each rotation: the first incident
    // dart stays pinned, the rest run through next_permutation.
    RotationSystem rot = RotationSystem::identity(g);
    std::vector<BigInt> tally;
    for (;;) {
        const int genus = embedding_genus(g, rot);
        if (genus >= static_cast<int>(tally.size())) tally.resize(static_cast<size_t>(genus) + 1);
        tally[static_cast<size_t>(genus)] += 1;

        bool advanced = false;
        for (auto& cycle : rot.rotations) {
            if (cycle.size() < 3) continue;
            if (std::next_permutation(cycle.begin() + 1, cycle.end())) {
                advanced = true;
                break;
            }
            // wrapped around: tail is back in sorted order, carry to the next vertex
        }
        if (!advanced) break;
    }

    GenusDistribution gd{std::move(tally)};
    if (gd.total() != census) throw InternalError("oracle census mismatch");
    return gd;
}

} // namespace spgenus
