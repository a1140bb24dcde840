#ifndef SPGENUS_PRODUCTIONS_HPP
#define SPGENUS_PRODUCTIONS_HPP

#include <array>
#include <cstdint>

#include "spgenus/pgd.hpp"

namespace spgenus {

// Partial kinds of a double-rooted graph with two univalent roots.
enum class UUKind : std::uint8_t { Dot = 0, Prime = 1 };

// Partial kinds after the first (unmodified) parallel join.
enum class ClosureKind : std::uint8_t { SsDot = 0, SsPrime = 1, DdDoublePrime = 2 };

// One consequent term: `coefficient` embeddings of kind `kind` at genus
// i + j + `genus_increment`.
template <typename Kind>
struct Consequent {
    Kind kind;
    int coefficient;
    int genus_increment; // 0 or 1
};

// Rules for the two modified operations on dmt-strings (uu x uu -> uu).
struct StringProduction {
    UUKind lhs_a;
    UUKind lhs_b;
    std::array<Consequent<UUKind>, 2> terms;
    int num_terms;
};

// Rules for the unmodified parallel join (uu x uu -> ss/dd).
struct JoinProduction {
    UUKind lhs_a;
    UUKind lhs_b;
    Consequent<ClosureKind> term;
};

// Rules for the final closure; consequents are plain genus counts.
struct CloseProduction {
    ClosureKind lhs_a;
    UUKind lhs_b;
    struct Term {
        int coefficient;
        int genus_increment;
    };
    std::array<Term, 2> terms;
    int num_terms;
};

// The tables are the single source of truth for the calculus; application
// code only folds them bilinearly over the nonzero entries of both operands.

// Modified parallel operation (merge both root pairs, then attach a spike at
// each merged vertex):
//   uu*_i  op uu*_j  -> 4 uu*_{i+j+1}
//   uu*_i  op uu'_j  -> 4 uu'_{i+j+1}
//   uu'_i  op uu*_j  -> 4 uu'_{i+j+1}
//   uu'_i  op uu'_j  -> 2 uu*_{i+j} + 2 uu'_{i+j}
const std::array<StringProduction, 4>& mod_parallel_rules();

// Modified series operation (merge second root of the first string with the
// first root of the second, then smooth the merged vertex):
//   uu'_i op uu'_j -> uu'_{i+j};  every other pair -> uu*_{i+j}
const std::array<StringProduction, 4>& mod_series_rules();

// Unmodified parallel join of two dmt-strings (merged roots stay bivalent):
//   uu*_i op uu*_j -> ss*_{i+j+1}
//   uu*_i op uu'_j -> ss'_{i+j+1}
//   uu'_i op uu*_j -> ss'_{i+j+1}
//   uu'_i op uu'_j -> dd''_{i+j}
const std::array<JoinProduction, 4>& join_parallel_rules();

// Final parallel closure, producing a plain genus distribution:
//   dd''_i op uu*_j -> 4 g_{i+j+1}
//   dd''_i op uu'_j -> 2 g_{i+j} + 2 g_{i+j+1}
//   ss*_i  op uu*_j -> 4 g_{i+j+1}
//   ss*_i  op uu'_j -> 4 g_{i+j+1}
//   ss'_i  op uu*_j -> 4 g_{i+j+1}
//   ss'_i  op uu'_j -> 4 g_{i+j}
const std::array<CloseProduction, 6>& close_parallel_rules();

// Bilinear extensions of the rule tables.  Total-count factors are 4, 1, 1, 4
// respectively: each rotation at a merged trivalent vertex resolves into a
// fixed number of embeddings, encoded by the rule coefficients.
UUPartials mod_parallel(const UUPartials& a, const UUPartials& b);
UUPartials mod_series(const UUPartials& a, const UUPartials& b);
ClosurePartials join_parallel(const UUPartials& a, const UUPartials& b);
GenusDistribution close_parallel(const ClosurePartials& a, const UUPartials& b);

// pgd of K2: one embedding, in the sphere, with both univalent endpoints on
// its single fb-walk.  Identity of mod_series.
UUPartials k2_pgd();

} // namespace spgenus

#endif
