#pragma once

// Non-vanishing of A_q(lambda), the H.P.-conditions, and the integer
// feasibility system deciding whether the Dirac index is nonzero.
//
// Every operation comes in two forms: one taking (datum, lambda) and one
// taking an AqModule, which computes nu, the R-table and the range class once
// so that grid sweeps do not recompute them per criterion. An AqModule refers
// to its datum and lambda, which must outlive it.

#include "aqtab/combinatorics.hpp"
#include "aqtab/core.hpp"
#include "aqtab/ranges.hpp"
#include "aqtab/tableau.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aqtab {

// Outcome of a per-adjacent-pair criterion; failing_pair is the first i whose
// pair (i, i+1) fails.
struct PairCriterion {
    bool holds = true;
    std::optional<int> failing_pair;
};

struct HpCondition {
    bool hp1 = true;          // no value of nu occurs more than twice
    bool hp2_original = true; // at most min{p, q} distinct values occur twice
    int repeated_values = 0;
    int max_multiplicity = 0;
};

struct Window {
    int k = 0;
    int l = 0;
    friend bool operator==(const Window&, const Window&) = default;
};

struct StrengthenedHp {
    bool satisfied = true;
    bool hp1 = true;
    // First (k, l), k ascending then l ascending, with
    // sum_{i=k}^{l-1} R_{i,i+1} > min{sum_{i=k}^{l} p_i, sum_{i=k}^{l} q_i}.
    std::optional<Window> failing_window;
};

class AqModule {
public:
    AqModule(const ParabolicDatum& datum, const LambdaParam& lambda);
    AqModule(ParabolicDatum&&, const LambdaParam&) = delete;
    AqModule(const ParabolicDatum&, LambdaParam&&) = delete;
    AqModule(ParabolicDatum&&, LambdaParam&&) = delete;

    const ParabolicDatum& datum() const noexcept { return *datum_; }
    const LambdaParam& lambda() const noexcept { return *lambda_; }
    const Weight& nu() const noexcept { return nu_; }
    const RTable& r_table() const noexcept { return r_; }
    const RangeClass& range() const noexcept { return range_; }

    // Computed on first use and cached; a module is not meant to be shared
    // between threads.
    const PairCriterion& nonvanishing() const; // NotInNiceRange outside the nice range
    const HpCondition& hp() const;
    const StrengthenedHp& strengthened() const; // NotInNiceRange outside the nice range

private:
    const ParabolicDatum* datum_;
    const LambdaParam* lambda_;
    Weight nu_;
    RTable r_;
    RangeClass range_;
    mutable std::optional<PairCriterion> nonvanishing_;
    mutable std::optional<HpCondition> hp_;
    mutable std::optional<StrengthenedHp> strengthened_;
};

// Nice range only (NotInNiceRange otherwise): A_q(lambda) != 0 iff
// lambda_{i+1} - lambda_i <= min{p_i, q_{i+1}} + min{q_i, p_{i+1}} for all i.
PairCriterion nonvanishing_nice(const AqModule& module);
PairCriterion nonvanishing_nice(const ParabolicDatum& datum, const LambdaParam& lambda);

// Mediocre range only (NotInMediocreRange otherwise). Checks
// sing(S_i, S_{i+1}) <= overlap(S_i, S_{i+1}) on the initial q-consistent
// partition of the quasitableau. A failure forces A_q(lambda) = 0; a pass is
// conclusive only in the nice range.
PairCriterion mediocre_necessary_check(const AqModule& module, const PartitionedTableau& quasitableau);
PairCriterion mediocre_necessary_check(const ParabolicDatum& datum, const LambdaParam& lambda);

HpCondition hp_condition(const AqModule& module);
HpCondition hp_condition(const ParabolicDatum& datum, const LambdaParam& lambda);

// Nice range only (NotInNiceRange otherwise).
StrengthenedHp strengthened_hp(const AqModule& module);
StrengthenedHp strengthened_hp(const ParabolicDatum& datum, const LambdaParam& lambda);

// a[i-1] = a_{i,i+1}, b[i-1] = b_{i,i+1}
struct FeasibilitySolution {
    std::vector<int> a;
    std::vector<int> b;
    friend bool operator==(const FeasibilitySolution&, const FeasibilitySolution&) = default;
};

// The adjacent-index system
//   a_{i,i+1} + b_{i,i+1} = R_{i,i+1}            1 <= i <= r-1
//   a_{i,i+1} + b_{i-1,i} <= p_i                 1 <= i <= r
//   a_{i-1,i} + b_{i,i+1} <= q_i                 1 <= i <= r
// over non-negative integers, with a, b = 0 at i = 0 and i = r.
struct FeasibilityProblem {
    std::vector<int> p;
    std::vector<int> q;
    std::vector<int> r_adjacent;

    static FeasibilityProblem from(const ParabolicDatum& datum, const RTable& table);
};

std::optional<std::string> feasibility_violation(const FeasibilityProblem& problem,
                                                 const FeasibilitySolution& solution);

// Exhaustive search over a_{i,i+1} in [0, R_{i,i+1}]; returns the
// lexicographically smallest feasible a-vector.
std::optional<FeasibilitySolution> solve_bruteforce(const FeasibilityProblem& problem);

// Inductive construction on r. Base r = 2: a_{12} = min{p_1, q_2, R_{12}}.
// If R_{r-1,r} <= min{p_{r-1}, q_{r-1}, p_r, q_r}, solve the first r-1
// blocks and set a_{r-1,r} = min{p_{r-1} - b_{r-2,r-1}, R_{r-1,r}}.
// Otherwise remove the excess d from (p_{r-1}, q_r), or from (q_{r-1}, p_r)
// when min{p_r, q_{r-1}} > min{p_{r-1}, q_r}, solve the reduced system and add
// d back to a_{r-1,r} (resp. b_{r-1,r}). The result is not validated here.
FeasibilitySolution construct_solution(const FeasibilityProblem& problem);

// Preconditions: nice range, A_q(lambda) != 0, hp1 (PreconditionViolated).
std::optional<FeasibilitySolution> dirac_feasibility_bruteforce(const AqModule& module);
std::optional<FeasibilitySolution> dirac_feasibility_bruteforce(const ParabolicDatum& datum,
                                                                const LambdaParam& lambda);

// Preconditions: nice range, A_q(lambda) != 0, strengthened H.P.-condition
// (PreconditionViolated). Throws InternalContradiction if the constructed
// solution does not satisfy the system.
FeasibilitySolution dirac_constructive(const AqModule& module);
FeasibilitySolution dirac_constructive(const ParabolicDatum& datum, const LambdaParam& lambda);

struct Verdict {
    bool nonzero_module = false;
    bool hp1 = false;
    bool hp2_original = false;
    bool strengthened_hp = false;
    std::optional<bool> dirac_index_nonzero;
    std::optional<FeasibilitySolution> witness;
    std::optional<Window> failing_window;
    std::optional<std::string> failure_site;
};

// Nice range (NotInNiceRange) and nonzero module (ModuleVanishes) only.
// The answer is the strengthened H.P.-condition; the witness comes from the
// inductive construction and the answer is cross-checked against exhaustive
// search (InternalContradiction on disagreement).
Verdict dirac_index_nonzero(const AqModule& module);
Verdict dirac_index_nonzero(const ParabolicDatum& datum, const LambdaParam& lambda);

struct KTypeWeight {
    Weight weight; // lambda + 2 rho(u ∩ s)
    bool k_dominant = true;
    std::vector<std::int64_t> eta_plus;
    std::vector<std::int64_t> eta_minus;
};

// Block j contributes lambda_j + eta_{j,+} on its p_j slots, then
// lambda_j + eta_{j,-} on its q_j slots, where
//   eta_{j,+} = -sum_{l<j} q_l + sum_{t>j} q_t,
//   eta_{j,-} = -sum_{l<j} p_l + sum_{t>j} p_t.
// k_dominant: lambda_{j+1} - lambda_j <= p_j + p_{j+1} and <= q_j + q_{j+1}.
KTypeWeight ktype_weight(const ParabolicDatum& datum, const LambdaParam& lambda);

} // namespace aqtab
