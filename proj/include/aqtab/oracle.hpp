#pragma once

// Enumerators for parabolic data and lambda grids, independent brute-force
// oracles, and the exhaustive sweeps comparing them with the library.

#include "aqtab/core.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aqtab {

// Every ordered sequence of pairs (p_i, q_i) != (0,0) with sum n_i <= n_max,
// ordered by total n, then by the composition (n_1, ..., n_r)
// lexicographically, then by (p_1, ..., p_r).
std::vector<ParabolicDatum> enumerate_parabolics(int n_max);
void for_each_parabolic(int n_max, const std::function<void(const ParabolicDatum&)>& visit);

// Sum over compositions of n of prod (n_i + 1), computed from
// a(0) = 1, a(n) = sum_{k=1}^{n} (k+1) a(n-k).
std::uint64_t parabolic_count(int n);

// lambda_1 = 0 and lambda_{i+1} - lambda_i in [-span, span].
std::vector<LambdaParam> enumerate_lambdas(const ParabolicDatum& datum, int span);

// lambda_1 = 0 and lambda_{i+1} - lambda_i in [lower, upper[i-1]]; gaps vary
// fastest at the last pair. Visits nothing if some upper bound is below lower.
void for_each_lambda(std::size_t r, int lower, std::span<const int> upper,
                     const std::function<void(const LambdaParam&)>& visit);

struct Counterexample {
    ParabolicDatum datum;
    std::optional<LambdaParam> lambda;
    std::string detail;
};

struct SweepReport {
    std::string name;
    int n_max = 0;
    std::optional<int> span;
    std::uint64_t datums = 0;
    std::uint64_t lambda_points = 0;
    std::uint64_t agreements = 0;
    std::uint64_t disagreements = 0;
    std::optional<Counterexample> first_counterexample;
    // Informational counters; never part of the pass/fail decision.
    std::vector<std::pair<std::string, std::uint64_t>> statistics;

    bool clean() const noexcept { return disagreements == 0 && agreements > 0; }
    void add_statistic(const std::string& key, std::uint64_t amount);
    void record_failure(const ParabolicDatum& datum, const std::optional<LambdaParam>& lambda,
                        std::string detail);
};

// Sums counts; keeps the counterexample with the smaller (datum, lambda).
SweepReport merge(SweepReport a, const SweepReport& b);

struct SweepOptions {
    unsigned threads = 1;
};

// overlap_by_definition on the built signed tableau against
// overlap_by_formula, for every datum and adjacent pair.
SweepReport sweep_overlap(int n_max, const SweepOptions& options = {});

// On every built signed tableau, [n_i - m_i + j]^{(i)} lies in the same row as
// or below [j]^{(i+1)} for all j <= m_i, m_i = overlap_by_formula(datum, i).
SweepReport sweep_positional_lemma(int n_max, const SweepOptions& options = {});

// Over nice-range points with A_q(lambda) != 0: strengthened_hp against
// hp1 plus exhaustive feasibility, with R and hp1 recomputed from the block
// value intervals; every feasible point must get a valid constructive witness.
SweepReport sweep_dirac_equivalence(int n_max, int span, const SweepOptions& options = {});

// One pass over the nice-range grid, gaps in [-span, min{n_i, n_{i+1}}].
struct NiceRangeReports {
    // nonvanishing_nice => the quasitableau is a nu-antitableau
    SweepReport antitableau;
    // mediocre_necessary_check == nonvanishing_nice
    SweepReport mediocre_agreement;
    // hp1 => R_{ij} = 0 for j > i+1 and R_{i-1,i} + R_{i,i+1} <= n_i
    SweepReport multiplicity_bounds;
    // nonvanishing_nice => k_dominant, and the weight is dominant for
    // U(p) x U(q) when checked coordinate by coordinate
    SweepReport k_dominance;
};
NiceRangeReports sweep_nice_range(int n_max, int span, const SweepOptions& options = {});

// Unpruned grid, gaps in [-span, span]: good => weakly good => nice =>
// weakly fair => mediocre, fair => weakly fair, label matches the flags, and
// classify is unchanged by translating lambda.
SweepReport sweep_range_ladder(int n_max, int span, const SweepOptions& options = {});

// Dominance for U(p) x U(q) read directly off the weight: the plus slots
// (the first p_j coordinates of each block) weakly decrease, and so do the
// minus slots.
bool is_k_dominant_direct(const ParabolicDatum& datum, const Weight& weight);

} // namespace aqtab
