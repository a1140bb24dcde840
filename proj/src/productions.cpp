#include "spgenus/productions.hpp"

namespace spgenus {

namespace {

constexpr Consequent<UUKind> kUnusedTerm{UUKind::Dot, 0, 0};

constexpr std::array<StringProduction, 4> kModParallel{{
    {UUKind::Dot, UUKind::Dot, {{{UUKind::Dot, 4, 1}, kUnusedTerm}}, 1},
    {UUKind::Dot, UUKind::Prime, {{{UUKind::Prime, 4, 1}, kUnusedTerm}}, 1},
    {UUKind::Prime, UUKind::Dot, {{{UUKind::Prime, 4, 1}, kUnusedTerm}}, 1},
    {UUKind::Prime, UUKind::Prime, {{{UUKind::Dot, 2, 0}, {UUKind::Prime, 2, 0}}}, 2},
}};

constexpr std::array<StringProduction, 4> kModSeries{{
    {UUKind::Dot, UUKind::Dot, {{{UUKind::Dot, 1, 0}, kUnusedTerm}}, 1},
    {UUKind::Dot, UUKind::Prime, {{{UUKind::Dot, 1, 0}, kUnusedTerm}}, 1},
    {UUKind::Prime, UUKind::Dot, {{{UUKind::Dot, 1, 0}, kUnusedTerm}}, 1},
    {UUKind::Prime, UUKind::Prime, {{{UUKind::Prime, 1, 0}, kUnusedTerm}}, 1},
}};

constexpr std::array<JoinProduction, 4> kJoinParallel{{
    {UUKind::Dot, UUKind::Dot, {ClosureKind::SsDot, 1, 1}},
    {UUKind::Dot, UUKind::Prime, {ClosureKind::SsPrime, 1, 1}},
    {UUKind::Prime, UUKind::Dot, {ClosureKind::SsPrime, 1, 1}},
    {UUKind::Prime, UUKind::Prime, {ClosureKind::DdDoublePrime, 1, 0}},
}};

constexpr std::array<CloseProduction, 6> kCloseParallel{{
    {ClosureKind::DdDoublePrime, UUKind::Dot, {{{4, 1}, {0, 0}}}, 1},
    {ClosureKind::DdDoublePrime, UUKind::Prime, {{{2, 0}, {2, 1}}}, 2},
    {ClosureKind::SsDot, UUKind::Dot, {{{4, 1}, {0, 0}}}, 1},
    {ClosureKind::SsDot, UUKind::Prime, {{{4, 1}, {0, 0}}}, 1},
    {ClosureKind::SsPrime, UUKind::Dot, {{{4, 1}, {0, 0}}}, 1},
    {ClosureKind::SsPrime, UUKind::Prime, {{{4, 0}, {0, 0}}}, 1},
}};

const GenusDistribution& pick(const UUPartials& p, UUKind k) {
    return k == UUKind::Dot ? p.dot : p.prime;
}

const GenusDistribution& pick(const ClosurePartials& p, ClosureKind k) {
    switch (k) {
    case ClosureKind::SsDot:
        return p.ss_dot;
    case ClosureKind::SsPrime:
        return p.ss_prime;
    default:
        return p.dd_dprime;
    }
}

// Accumulates coefficient * a_i * b_j into out[i + j + increment] over all
// nonzero antecedent pairs; shared by every production fold.
void accumulate(std::vector<BigInt>& out, const GenusDistribution& a, const GenusDistribution& b,
                int coefficient, int increment) {
    if (a.empty() || b.empty() || coefficient == 0)
        return;
    const size_t need = static_cast<size_t>(a.size() + b.size() - 1 + increment);
    if (out.size() < need)
        out.resize(need, 0);
    for (int i = 0; i < a.size(); ++i) {
        if (a.at(i) == 0)
            continue;
        const BigInt scaled = a.at(i) * coefficient;
        for (int j = 0; j < b.size(); ++j)
            if (b.at(j) != 0)
                out[static_cast<size_t>(i + j + increment)] += scaled * b.at(j);
    }
}

UUPartials apply_string_rules(const std::array<StringProduction, 4>& rules, const UUPartials& a,
                              const UUPartials& b) {
    std::vector<BigInt> dot, prime;
    for (const StringProduction& rule : rules) {
        const GenusDistribution& lhs_a = pick(a, rule.lhs_a);
        const GenusDistribution& lhs_b = pick(b, rule.lhs_b);
        for (int t = 0; t < rule.num_terms; ++t) {
            const auto& term = rule.terms[static_cast<size_t>(t)];
            accumulate(term.kind == UUKind::Dot ? dot : prime, lhs_a, lhs_b, term.coefficient,
                       term.genus_increment);
        }
    }
    return UUPartials{GenusDistribution(std::move(dot)), GenusDistribution(std::move(prime))};
}

} // namespace

const std::array<StringProduction, 4>& mod_parallel_rules() { return kModParallel; }
const std::array<StringProduction, 4>& mod_series_rules() { return kModSeries; }
const std::array<JoinProduction, 4>& join_parallel_rules() { return kJoinParallel; }
const std::array<CloseProduction, 6>& close_parallel_rules() { return kCloseParallel; }

UUPartials mod_parallel(const UUPartials& a, const UUPartials& b) {
    return apply_string_rules(kModParallel, a, b);
}

UUPartials mod_series(const UUPartials& a, const UUPartials& b) {
    return apply_string_rules(kModSeries, a, b);
}

ClosurePartials join_parallel(const UUPartials& a, const UUPartials& b) {
    std::vector<BigInt> ss_dot, ss_prime, dd_dprime;
    for (const JoinProduction& rule : kJoinParallel) {
        auto& target = rule.term.kind == ClosureKind::SsDot     ? ss_dot
                       : rule.term.kind == ClosureKind::SsPrime ? ss_prime
                                                                : dd_dprime;
        accumulate(target, pick(a, rule.lhs_a), pick(b, rule.lhs_b), rule.term.coefficient,
                   rule.term.genus_increment);
    }
    return ClosurePartials{GenusDistribution(std::move(ss_dot)),
                           GenusDistribution(std::move(ss_prime)),
                           GenusDistribution(std::move(dd_dprime))};
}

GenusDistribution close_parallel(const ClosurePartials& a, const UUPartials& b) {
    std::vector<BigInt> out;
    for (const CloseProduction& rule : kCloseParallel) {
        const GenusDistribution& lhs_a = pick(a, rule.lhs_a);
        const GenusDistribution& lhs_b = pick(b, rule.lhs_b);
        for (int t = 0; t < rule.num_terms; ++t) {
            const auto& term = rule.terms[static_cast<size_t>(t)];
            accumulate(out, lhs_a, lhs_b, term.coefficient, term.genus_increment);
        }
    }
    return GenusDistribution(std::move(out));
}

UUPartials k2_pgd() { return UUPartials{GenusDistribution{}, GenusDistribution{1}}; }

} // namespace spgenus
