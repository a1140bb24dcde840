// Acceptance gate: seven end-to-end criteria, one PASS/FAIL line each.
// Exits nonzero if any criterion fails.  Tolerances are pinned below.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "spgenus/decompose.hpp"
#include "spgenus/engine.hpp"
#include "spgenus/oracle.hpp"
#include "spgenus/productions.hpp"
#include "test_support.hpp"

using namespace spgenus;
namespace st = spgenus::testing;

namespace {

constexpr double kMaxExampleSeconds = 1.0; // criterion 1
constexpr double kMaxRuntimeRatio = 5.0;   // criterion 7
constexpr int kCubicTrials = 200;          // criterion 3
constexpr int kTw2Trials = 50;             // criterion 4
constexpr int kPropertyCases = 10000;      // criterion 6

GenusDistribution gd(std::vector<long> v) {
    std::vector<BigInt> big(v.begin(), v.end());
    return GenusDistribution{std::move(big)};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// conservation facts, recomputed from scratch (not via the engine's checks)
bool conserves(const Multigraph& g, const GenusDistribution& d) {
    BigInt expected = 1;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        int f = 1;
        for (int k = 2; k < g.degree(v); ++k) f *= k;
        expected *= f;
    }
    return d.total() == expected && d.support_is_consecutive() &&
           d.max_genus() <= g.cycle_rank();
}

const DmtExpression& strand1() {
    static const DmtExpression e =
        st::ser(st::par(st::k2(), st::k2()), st::par(st::k2(), st::k2()));
    return e;
}
const DmtExpression& strand2() {
    static const DmtExpression e = st::ser(
        st::par(st::k2(), st::k2()), st::par(st::par(st::k2(), st::k2()), st::k2()));
    return e;
}
const DmtExpression& strand3() {
    static const DmtExpression e =
        st::par(st::par(st::k2(), st::k2()), st::par(st::k2(), st::k2()));
    return e;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

// collected (graph, distribution) pairs feeding criterion 5
std::vector<std::pair<Multigraph, GenusDistribution>> g_computed;

Outcome criterion1_example_exact_and_fast() {
    const Multigraph g = st::merge_strands(strand1(), strand2(), strand3());
    if (g.num_vertices() != 18 || !g.is_regular(3))
        return {false, "construction is off"};
    const auto t0 = std::chrono::steady_clock::now();
    const ComputationReport r = gd_auto(g, std::pair<Vertex, Vertex>{0, 1});
    const double elapsed = seconds_since(t0);
    g_computed.emplace_back(g, r.gd);
    const bool exact = r.gd == gd({512, 10752, 68608, 129024, 53248});
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3fs", elapsed);
    if (!exact) return {false, "wrong distribution"};
    if (elapsed >= kMaxExampleSeconds) return {false, std::string("too slow: ") + buf};
    return {true, std::string("exact in ") + buf};
}

Outcome criterion2_intermediates_pinned() {
    // production-level: the doubled-edge string
    const UUPartials d2 = mod_parallel(k2_pgd(), k2_pgd());
    if (d2.dot != gd({2}) || d2.prime != gd({2}))
        return {false, "doubled-edge partials are off"};

    const Multigraph g = st::merge_strands(strand1(), strand2(), strand3());
    const ComputationReport r = gd_auto(g, std::pair<Vertex, Vertex>{0, 1});
    if (!r.cubic) return {false, "no trace recorded"};
    const CubicTrace& t = *r.cubic;
    if (t.strands[0].dot != gd({12}) || t.strands[0].prime != gd({4}))
        return {false, "first strand partials are off"};
    if (t.strands[1].dot != gd({24, 16}) || t.strands[1].prime != gd({8, 16}))
        return {false, "second strand partials are off"};
    if (t.strands[2].dot != gd({8, 16}) || t.strands[2].prime != gd({8, 32}))
        return {false, "third strand partials are off"};
    if (t.join.ss_dot != gd({0, 288, 192}) || t.join.ss_prime != gd({0, 192, 256}) ||
        t.join.dd_dprime != gd({32, 64}))
        return {false, "join partials are off"};
    return {true, "doubled-edge string, three strands and join all match"};
}

Outcome criterion3_cubic_vs_oracle() {
    for (int i = 0; i < kCubicTrials; ++i) {
        const int steps = i % 7; // 0..6 dmt-steps, at most 14 vertices
        const Multigraph g = random_cubic_sp(steps, 1000 + static_cast<std::uint64_t>(i));
        const GenusDistribution mine = gd_auto(g).gd;
        if (mine != gd_brute_force(g)) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "disagreement at trial %d (%d dmt-steps)", i,
                          steps);
            return {false, buf};
        }
        g_computed.emplace_back(g, mine);
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%d instances agree", kCubicTrials);
    return {true, buf};
}

Outcome criterion4_tw2_vs_oracle() {
    // the fixed two-blocks-and-a-bridge instance first
    const Multigraph bridged =
        parse_graph("0 1\n0 1\n0 2\n2 1\nx y\nx y\nx z\nz y\n2 z\n");
    const GenusDistribution bridged_gd = gd_auto(bridged).gd;
    if (bridged_gd != gd({16, 32, 16}) || bridged_gd != gd_brute_force(bridged))
        return {false, "bridged-blocks instance is off"};
    g_computed.emplace_back(bridged, bridged_gd);

    std::mt19937_64 rng(0xacce97);
    for (int i = 0; i < kTw2Trials; ++i) {
        const Multigraph g = st::random_tw2_instance(rng);
        const GenusDistribution mine = gd_auto(g).gd;
        if (mine != gd_brute_force(g)) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "disagreement at trial %d", i);
            return {false, buf};
        }
        g_computed.emplace_back(g, mine);
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "%d random instances and the bridged case agree",
                  kTw2Trials);
    return {true, buf};
}

Outcome criterion5_conservation() {
    int checked = 0;
    for (const auto& [g, d] : g_computed) {
        if (!conserves(g, d)) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "violated on instance %d", checked);
            return {false, buf};
        }
        ++checked;
    }
    if (checked < kCubicTrials + kTw2Trials)
        return {false, "instance pool went missing"};
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "%d distributions conserve counts, have solid support, respect the "
                  "cycle-rank bound",
                  checked);
    return {true, buf};
}

Outcome criterion6_production_properties() {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    auto random_gd = [&rng]() {
        const size_t len = rng() % 5;
        std::vector<BigInt> counts(len);
        for (BigInt& c : counts) {
            c = static_cast<long>(rng() % 1000);
            if (rng() % 8 == 0) c <<= 64;
        }
        return GenusDistribution{std::move(counts)};
    };
    const UUPartials k2 = k2_pgd();
    for (int i = 0; i < kPropertyCases; ++i) {
        UUPartials a, b, c;
        a.dot = random_gd();
        a.prime = random_gd();
        b.dot = random_gd();
        b.prime = random_gd();
        c.dot = random_gd();
        c.prime = random_gd();
        const BigInt ta = a.total(), tb = b.total(), tc = c.total();

        const UUPartials par = mod_parallel(a, b);
        const UUPartials par_rev = mod_parallel(b, a);
        const UUPartials ser = mod_series(a, b);
        const UUPartials ser_rev = mod_series(b, a);
        const ClosurePartials join = join_parallel(a, b);
        const ClosurePartials join_rev = join_parallel(b, a);
        const UUPartials ident = mod_series(a, k2);
        const GenusDistribution closed = close_parallel(join, c);

        const bool ok =
            par.dot == par_rev.dot && par.prime == par_rev.prime &&
            ser.dot == ser_rev.dot && ser.prime == ser_rev.prime &&
            join.ss_dot == join_rev.ss_dot && join.ss_prime == join_rev.ss_prime &&
            join.dd_dprime == join_rev.dd_dprime && ident.dot == a.dot &&
            ident.prime == a.prime && par.total() == 4 * ta * tb &&
            ser.total() == ta * tb && join.total() == ta * tb &&
            closed.total() == 4 * ta * tb * tc &&
            closed == close_parallel(join_parallel(b, c), a) &&
            closed == close_parallel(join_parallel(a, c), b);
        if (!ok) {
            char buf[48];
            std::snprintf(buf, sizeof buf, "violated at case %d", i);
            return {false, buf};
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "%d cases: commutativity, series identity, count factors, "
                  "closure symmetry",
                  kPropertyCases);
    return {true, buf};
}

Outcome criterion7_scaling() {
    double best[3] = {0, 0, 0};
    const int sizes[3] = {500, 1000, 2000};
    for (int s = 0; s < 3; ++s) {
        const int tau = (sizes[s] - 2) / 2;
        const Multigraph g = random_cubic_sp(tau, 7);
        double best_run = 1e18;
        for (int run = 0; run < 3; ++run) {
            const auto t0 = std::chrono::steady_clock::now();
            const ComputationReport r = gd_auto(g);
            const double elapsed = seconds_since(t0);
            if (r.gd.empty()) return {false, "empty distribution"};
            if (elapsed < best_run) best_run = elapsed;
        }
        best[s] = best_run;
    }
    const double r1 = best[1] / best[0];
    const double r2 = best[2] / best[1];
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "t(500)=%.3fs t(1000)=%.3fs t(2000)=%.3fs, ratios %.2f and %.2f",
                  best[0], best[1], best[2], r1, r2);
    if (r1 > kMaxRuntimeRatio || r2 > kMaxRuntimeRatio)
        return {false, std::string("superquadratic growth: ") + buf};
    return {true, buf};
}

} // namespace

int main() {
    struct Entry {
        const char* text;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {"the 18-vertex three-strand instance is exact and fast", criterion1_example_exact_and_fast},
        {"hand-computed intermediate partials are reproduced", criterion2_intermediates_pinned},
        {"engine agrees with exhaustive enumeration on random cubic instances", criterion3_cubic_vs_oracle},
        {"engine agrees with exhaustive enumeration on random treewidth-2 instances", criterion4_tw2_vs_oracle},
        {"all computed distributions satisfy the conservation laws", criterion5_conservation},
        {"production-calculus algebra holds on random partials", criterion6_production_properties},
        {"runtime stays near-quadratic up to 2000 vertices", criterion7_scaling},
    };
    bool all = true;
    int id = 0;
    for (const Entry& e : entries) {
        ++id;
        Outcome o;
        try {
            o = e.fn();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        all = all && o.pass;
        std::printf("%s criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", id, e.text,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
