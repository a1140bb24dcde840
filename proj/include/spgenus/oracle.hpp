#ifndef SPGENUS_ORACLE_HPP
#define SPGENUS_ORACLE_HPP

#include <vector>

#include "spgenus/multigraph.hpp"
#include "spgenus/pgd.hpp"

namespace spgenus {

// One oriented embedding as a combinatorial map.  Edge e owns darts 2e (its
// u end) and 2e+1 (its v end); rotations[v] lists the darts at v in cyclic
// counterclockwise order.
struct RotationSystem {
    std::vector<std::vector<int>> rotations;

    static RotationSystem identity(const Multigraph& g); // incidence order
    void validate(const Multigraph& g) const;            // throws InternalError
};

// Number of face-boundary walks: orbits of dart -> rotation successor of the
// dart's partner.
int trace_faces(const Multigraph& g, const RotationSystem& rot);

// Genus of the embedded surface via the Euler characteristic.
int embedding_genus(const Multigraph& g, const RotationSystem& rot);

// Number of rotation systems (one dart per vertex pinned as cyclic anchor):
// the product of (deg(v) - 1)! over all vertices.
BigInt count_rotation_systems(const Multigraph& g);

inline constexpr long kDefaultOracleLimit = 1L << 20;

// Exhaustive genus distribution: enumerates every rotation system, traces its
// faces, and tallies by genus.  Completely independent of the production
// calculus, so agreement between the two is meaningful evidence.
// Throws LimitError when the census exceeds `limit` embeddings.
GenusDistribution gd_brute_force(const Multigraph& g, const BigInt& limit = kDefaultOracleLimit);

} // namespace spgenus

#endif
