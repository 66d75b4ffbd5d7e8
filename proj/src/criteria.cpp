#include "aqtab/criteria.hpp"

#include <algorithm>
#include <array>
#include <span>

namespace aqtab {

AqModule::AqModule(const ParabolicDatum& datum, const LambdaParam& lambda)
    : datum_(&datum)
    , lambda_(&lambda)
    , nu_(aqtab::nu(datum, lambda))
    , r_(aqtab::r_table(datum, nu_))
    , range_(classify(datum, nu_))
{
}

namespace {

void require_nice(const AqModule& m)
{
    if (!m.range().nice)
        throw Error(ErrorKind::NotInNiceRange,
                    "lambda = " + m.lambda().to_string() + " is not nice for " + m.datum().to_string());
}

std::string window_string(const Window& w)
{
    return "window (" + std::to_string(w.k) + "," + std::to_string(w.l) + ")";
}

} // namespace

namespace {

PairCriterion compute_nonvanishing(const AqModule& module)
{
    require_nice(module);
    const auto& datum = module.datum();
    for (int i = 1; i < static_cast<int>(datum.r()); ++i) {
        if (module.lambda().gap(static_cast<std::size_t>(i)) > overlap_by_formula(datum, i))
            return {false, i};
    }
    return {};
}

} // namespace

const PairCriterion& AqModule::nonvanishing() const
{
    if (!nonvanishing_)
        nonvanishing_ = compute_nonvanishing(*this);
    return *nonvanishing_;
}

PairCriterion nonvanishing_nice(const AqModule& module)
{
    return module.nonvanishing();
}

PairCriterion nonvanishing_nice(const ParabolicDatum& datum, const LambdaParam& lambda)
{
    return nonvanishing_nice(AqModule(datum, lambda));
}

namespace {

void require_mediocre(const AqModule& m)
{
    if (!m.range().mediocre)
        throw Error(ErrorKind::NotInMediocreRange,
                    "lambda = " + m.lambda().to_string() + " is not mediocre for " + m.datum().to_string());
}

} // namespace

PairCriterion mediocre_necessary_check(const AqModule& module, const PartitionedTableau& quasitableau)
{
    require_mediocre(module);
    for (int i = 1; i < quasitableau.block_count(); ++i) {
        if (singularity(quasitableau, i) > overlap_by_definition(quasitableau, i))
            return {false, i};
    }
    return {};
}

PairCriterion mediocre_necessary_check(const ParabolicDatum& datum, const LambdaParam& lambda)
{
    const AqModule module(datum, lambda);
    require_mediocre(module);
    return mediocre_necessary_check(module, fill_entries(build_signed_tableau(datum), datum, module.nu()));
}

namespace {

HpCondition compute_hp(const AqModule& module)
{
    const auto coords = module.nu().coords();
    std::array<std::int64_t, 64> small{};
    std::vector<std::int64_t> large;
    std::span<std::int64_t> values;
    if (coords.size() <= small.size()) {
        values = std::span<std::int64_t>(small.data(), coords.size());
    } else {
        large.resize(coords.size());
        values = large;
    }
    std::transform(coords.begin(), coords.end(), values.begin(), [](HalfInt v) { return v.doubled(); });
    std::sort(values.begin(), values.end());
    HpCondition hp;
    for (std::size_t k = 0; k < values.size();) {
        std::size_t run = 1;
        while (k + run < values.size() && values[k + run] == values[k])
            ++run;
        hp.max_multiplicity = std::max(hp.max_multiplicity, static_cast<int>(run));
        hp.repeated_values += run == 2 ? 1 : 0;
        k += run;
    }
    hp.hp1 = hp.max_multiplicity <= 2;
    hp.hp2_original = hp.repeated_values <= std::min(module.datum().p(), module.datum().q());
    return hp;
}

} // namespace

const HpCondition& AqModule::hp() const
{
    if (!hp_)
        hp_ = compute_hp(*this);
    return *hp_;
}

HpCondition hp_condition(const AqModule& module)
{
    return module.hp();
}

HpCondition hp_condition(const ParabolicDatum& datum, const LambdaParam& lambda)
{
    return hp_condition(AqModule(datum, lambda));
}

namespace {

StrengthenedHp compute_strengthened(const AqModule& module)
{
    require_nice(module);
    const auto& datum = module.datum();
    const auto& table = module.r_table();
    StrengthenedHp out;
    out.hp1 = module.hp().hp1;
    const int r = static_cast<int>(datum.r());
    for (int k = 1; k <= r && !out.failing_window; ++k) {
        int r_sum = 0;
        int p_sum = datum.p(static_cast<std::size_t>(k));
        int q_sum = datum.q(static_cast<std::size_t>(k));
        for (int l = k + 1; l <= r; ++l) {
            r_sum += table.adjacent(static_cast<std::size_t>(l - 1));
            p_sum += datum.p(static_cast<std::size_t>(l));
            q_sum += datum.q(static_cast<std::size_t>(l));
            if (r_sum > std::min(p_sum, q_sum)) {
                out.failing_window = Window{k, l};
                break;
            }
        }
    }
    out.satisfied = out.hp1 && !out.failing_window;
    return out;
}

} // namespace

const StrengthenedHp& AqModule::strengthened() const
{
    if (!strengthened_)
        strengthened_ = compute_strengthened(*this);
    return *strengthened_;
}

StrengthenedHp strengthened_hp(const AqModule& module)
{
    return module.strengthened();
}

StrengthenedHp strengthened_hp(const ParabolicDatum& datum, const LambdaParam& lambda)
{
    return strengthened_hp(AqModule(datum, lambda));
}

FeasibilityProblem FeasibilityProblem::from(const ParabolicDatum& datum, const RTable& table)
{
    FeasibilityProblem problem;
    problem.p.reserve(datum.r());
    problem.q.reserve(datum.r());
    for (const auto& bp : datum.pairs()) {
        problem.p.push_back(bp.p);
        problem.q.push_back(bp.q);
    }
    problem.r_adjacent = table.adjacent_values();
    return problem;
}

std::optional<std::string> feasibility_violation(const FeasibilityProblem& problem,
                                                 const FeasibilitySolution& solution)
{
    const std::size_t r = problem.p.size();
    const std::size_t pairs = r == 0 ? 0 : r - 1;
    if (problem.q.size() != r || problem.r_adjacent.size() != pairs || solution.a.size() != pairs ||
        solution.b.size() != pairs)
        return "solution has the wrong length";
    for (std::size_t i = 0; i < pairs; ++i) {
        if (solution.a[i] < 0 || solution.b[i] < 0)
            return "negative value at pair " + std::to_string(i + 1);
        if (solution.a[i] + solution.b[i] != problem.r_adjacent[i])
            return "a + b != R at pair " + std::to_string(i + 1);
    }
    auto a = [&](std::size_t i) { return i >= 1 && i <= pairs ? solution.a[i - 1] : 0; };
    auto b = [&](std::size_t i) { return i >= 1 && i <= pairs ? solution.b[i - 1] : 0; };
    for (std::size_t i = 1; i <= r; ++i) {
        if (a(i) + b(i - 1) > problem.p[i - 1])
            return "p-constraint fails at block " + std::to_string(i);
        if (a(i - 1) + b(i) > problem.q[i - 1])
            return "q-constraint fails at block " + std::to_string(i);
    }
    return std::nullopt;
}

namespace {

// a + b = R is kept by construction; only the block inequalities are tested.
bool block_constraints_hold(const FeasibilityProblem& problem, const FeasibilitySolution& s)
{
    const std::size_t r = problem.p.size();
    for (std::size_t i = 0; i < r; ++i) {
        const int a_here = i + 1 < r ? s.a[i] : 0;
        const int b_here = i + 1 < r ? s.b[i] : 0;
        const int a_before = i > 0 ? s.a[i - 1] : 0;
        const int b_before = i > 0 ? s.b[i - 1] : 0;
        if (a_here + b_before > problem.p[i] || a_before + b_here > problem.q[i])
            return false;
    }
    return true;
}

} // namespace

std::optional<FeasibilitySolution> solve_bruteforce(const FeasibilityProblem& problem)
{
    if (problem.q.size() != problem.p.size() || problem.r_adjacent.size() + 1 != std::max<std::size_t>(problem.p.size(), 1))
        throw Error(ErrorKind::LengthMismatch, "p, q and R have inconsistent lengths");
    if (std::any_of(problem.r_adjacent.begin(), problem.r_adjacent.end(), [](int v) { return v < 0; }))
        return std::nullopt;
    const std::size_t pairs = problem.r_adjacent.size();
    FeasibilitySolution candidate{std::vector<int>(pairs, 0), problem.r_adjacent};
    while (true) {
        if (block_constraints_hold(problem, candidate))
            return candidate;
        // odometer, last coordinate fastest: lexicographic order on a
        std::size_t pos = pairs;
        while (pos > 0) {
            --pos;
            if (candidate.a[pos] < problem.r_adjacent[pos]) {
                ++candidate.a[pos];
                --candidate.b[pos];
                break;
            }
            candidate.a[pos] = 0;
            candidate.b[pos] = problem.r_adjacent[pos];
            if (pos == 0)
                return std::nullopt;
        }
        if (pairs == 0)
            return std::nullopt;
    }
}

FeasibilitySolution construct_solution(const FeasibilityProblem& problem)
{
    const std::size_t r = problem.p.size();
    if (r <= 1)
        return {};
    if (problem.q.size() != r || problem.r_adjacent.size() != r - 1)
        throw Error(ErrorKind::LengthMismatch, "p, q and R have inconsistent lengths");
    if (std::any_of(problem.p.begin(), problem.p.end(), [](int v) { return v < 0; }) ||
        std::any_of(problem.q.begin(), problem.q.end(), [](int v) { return v < 0; }))
        throw Error(ErrorKind::InternalContradiction, "negative block size");
    std::vector<int> work(3 * r + 4 * (r - 1), 0);
    const std::span<int> p(work.data(), r);
    const std::span<int> q(work.data() + r, r);
    const std::span<int> R(work.data() + 2 * r, r - 1);
    std::copy(problem.p.begin(), problem.p.end(), p.begin());
    std::copy(problem.q.begin(), problem.q.end(), q.begin());
    std::copy(problem.r_adjacent.begin(), problem.r_adjacent.end(), R.begin());

    // The recursion unrolled: while m blocks remain, excess is moved out of
    // pair (m-1, m) until R_{m-1,m} <= min{p_{m-1}, q_{m-1}, p_m, q_m}, then
    // block m is split off. Pair k's excess and its split-time p_k, R are
    // kept for the way back.
    const std::span<int> plus_excess(work.data() + 3 * r - 1, r - 1);
    const std::span<int> minus_excess(plus_excess.data() + (r - 1), r - 1);
    const std::span<int> p_at_split(minus_excess.data() + (r - 1), r - 1);
    const std::span<int> r_at_split(p_at_split.data() + (r - 1), r - 1);
    for (std::size_t m = r; m >= 3; --m) {
        const std::size_t last = m - 1;
        const std::size_t prev = m - 2;
        while (true) {
            const int floor4 = std::min({p[prev], q[prev], p[last], q[last]});
            if (R[prev] <= floor4)
                break;
            const int d = R[prev] - floor4;
            R[prev] -= d;
            if (std::min(p[last], q[prev]) <= std::min(p[prev], q[last])) {
                p[prev] -= d;
                q[last] -= d;
                plus_excess[prev] += d;
            } else {
                q[prev] -= d;
                p[last] -= d;
                minus_excess[prev] += d;
            }
            if (p[prev] < 0 || q[prev] < 0 || p[last] < 0 || q[last] < 0)
                throw Error(ErrorKind::InternalContradiction, "reduction made a block size negative");
        }
        p_at_split[prev] = p[prev];
        r_at_split[prev] = R[prev];
    }

    FeasibilitySolution sol{std::vector<int>(r - 1, 0), std::vector<int>(r - 1, 0)};
    sol.a[0] = std::min({p[0], q[1], R[0]});
    sol.b[0] = R[0] - sol.a[0];
    for (std::size_t k = 1; k + 1 < r; ++k) {
        const int a = std::min(p_at_split[k] - sol.b[k - 1], r_at_split[k]);
        sol.a[k] = a + plus_excess[k];
        sol.b[k] = r_at_split[k] - a + minus_excess[k];
    }
    return sol;
}

namespace {

void require_dirac_preconditions(const AqModule& module, bool need_strengthened)
{
    if (!module.range().nice)
        throw Error(ErrorKind::PreconditionViolated, "lambda is not in the nice range");
    if (!module.nonvanishing().holds)
        throw Error(ErrorKind::PreconditionViolated, "A_q(lambda) vanishes");
    if (need_strengthened) {
        if (!module.strengthened().satisfied)
            throw Error(ErrorKind::PreconditionViolated, "strengthened H.P.-condition fails");
    } else if (!module.hp().hp1) {
        throw Error(ErrorKind::PreconditionViolated, "a value of nu occurs more than twice");
    }
}

} // namespace

std::optional<FeasibilitySolution> dirac_feasibility_bruteforce(const AqModule& module)
{
    require_dirac_preconditions(module, false);
    return solve_bruteforce(FeasibilityProblem::from(module.datum(), module.r_table()));
}

std::optional<FeasibilitySolution> dirac_feasibility_bruteforce(const ParabolicDatum& datum,
                                                                const LambdaParam& lambda)
{
    return dirac_feasibility_bruteforce(AqModule(datum, lambda));
}

FeasibilitySolution dirac_constructive(const AqModule& module)
{
    require_dirac_preconditions(module, true);
    const auto problem = FeasibilityProblem::from(module.datum(), module.r_table());
    auto solution = construct_solution(problem);
    if (auto why = feasibility_violation(problem, solution))
        throw Error(ErrorKind::InternalContradiction,
                    "construction failed for " + module.datum().to_string() + ", lambda = " +
                        module.lambda().to_string() + ": " + *why);
    return solution;
}

FeasibilitySolution dirac_constructive(const ParabolicDatum& datum, const LambdaParam& lambda)
{
    return dirac_constructive(AqModule(datum, lambda));
}

Verdict dirac_index_nonzero(const AqModule& module)
{
    require_nice(module);
    const auto& nonzero = module.nonvanishing();
    if (!nonzero.holds)
        throw Error(ErrorKind::ModuleVanishes,
                    "A_q(lambda) = 0: pair " + std::to_string(*nonzero.failing_pair) + " fails");

    Verdict v;
    v.nonzero_module = true;
    const auto& hp = module.hp();
    const auto& strong = module.strengthened();
    v.hp1 = hp.hp1;
    v.hp2_original = hp.hp2_original;
    v.strengthened_hp = strong.satisfied;
    v.dirac_index_nonzero = strong.satisfied;
    v.failing_window = strong.failing_window;
    if (!hp.hp1)
        v.failure_site = "a value of nu occurs " + std::to_string(hp.max_multiplicity) + " times";
    else if (strong.failing_window)
        v.failure_site = window_string(*strong.failing_window);

    if (hp.hp1) {
        const auto problem = FeasibilityProblem::from(module.datum(), module.r_table());
        const bool feasible = solve_bruteforce(problem).has_value();
        if (feasible != strong.satisfied)
            throw Error(ErrorKind::InternalContradiction,
                        "exhaustive search and the strengthened H.P.-condition disagree for " +
                            module.datum().to_string() + ", lambda = " + module.lambda().to_string());
    }
    if (strong.satisfied)
        v.witness = dirac_constructive(module);
    return v;
}

Verdict dirac_index_nonzero(const ParabolicDatum& datum, const LambdaParam& lambda)
{
    return dirac_index_nonzero(AqModule(datum, lambda));
}

KTypeWeight ktype_weight(const ParabolicDatum& datum, const LambdaParam& lambda)
{
    check_lengths(datum, lambda);
    const std::size_t r = datum.r();
    KTypeWeight out;
    std::vector<HalfInt> coords;
    coords.reserve(static_cast<std::size_t>(datum.n()));
    std::int64_t p_before = 0;
    std::int64_t q_before = 0;
    for (std::size_t j = 1; j <= r; ++j) {
        const std::int64_t p_after = datum.p() - p_before - datum.p(j);
        const std::int64_t q_after = datum.q() - q_before - datum.q(j);
        const std::int64_t eta_plus = -q_before + q_after;
        const std::int64_t eta_minus = -p_before + p_after;
        out.eta_plus.push_back(eta_plus);
        out.eta_minus.push_back(eta_minus);
        for (int t = 0; t < datum.p(j); ++t)
            coords.push_back(HalfInt(lambda.value(j) + eta_plus));
        for (int t = 0; t < datum.q(j); ++t)
            coords.push_back(HalfInt(lambda.value(j) + eta_minus));
        p_before += datum.p(j);
        q_before += datum.q(j);
    }
    out.weight = Weight(std::move(coords));
    for (std::size_t j = 1; j < r; ++j) {
        const auto gap = lambda.gap(j);
        if (gap > datum.p(j) + datum.p(j + 1) || gap > datum.q(j) + datum.q(j + 1))
            out.k_dominant = false;
    }
    return out;
}

} // namespace aqtab
