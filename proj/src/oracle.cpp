#include "aqtab/oracle.hpp"

#include "aqtab/combinatorics.hpp"
#include "aqtab/criteria.hpp"
#include "aqtab/ranges.hpp"
#include "aqtab/tableau.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace aqtab {

namespace {

void compositions(int n, std::vector<int>& prefix, const std::function<void(const std::vector<int>&)>& visit)
{
    if (n == 0) {
        visit(prefix);
        return;
    }
    for (int k = 1; k <= n; ++k) {
        prefix.push_back(k);
        compositions(n - k, prefix, visit);
        prefix.pop_back();
    }
}

} // namespace

void for_each_parabolic(int n_max, const std::function<void(const ParabolicDatum&)>& visit)
{
    std::vector<int> prefix;
    for (int n = 1; n <= n_max; ++n) {
        compositions(n, prefix, [&](const std::vector<int>& parts) {
            std::vector<BlockPair> pairs(parts.size());
            for (std::size_t i = 0; i < parts.size(); ++i)
                pairs[i] = {0, parts[i]};
            while (true) {
                visit(ParabolicDatum(pairs));
                std::size_t pos = pairs.size();
                while (pos > 0) {
                    --pos;
                    if (pairs[pos].p < parts[pos]) {
                        ++pairs[pos].p;
                        --pairs[pos].q;
                        break;
                    }
                    pairs[pos] = {0, parts[pos]};
                    if (pos == 0)
                        return;
                }
            }
        });
    }
}

std::vector<ParabolicDatum> enumerate_parabolics(int n_max)
{
    std::vector<ParabolicDatum> out;
    for_each_parabolic(n_max, [&](const ParabolicDatum& d) { out.push_back(d); });
    return out;
}

std::uint64_t parabolic_count(int n)
{
    if (n < 0)
        return 0;
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
    a[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int k = 1; k <= m; ++k)
            a[static_cast<std::size_t>(m)] += static_cast<std::uint64_t>(k + 1) * a[static_cast<std::size_t>(m - k)];
    }
    return a[static_cast<std::size_t>(n)];
}

void for_each_lambda(std::size_t r, int lower, std::span<const int> upper,
                     const std::function<void(const LambdaParam&)>& visit)
{
    if (r == 0)
        return;
    if (upper.size() != r - 1)
        throw Error(ErrorKind::LengthMismatch, "need one upper gap bound per adjacent pair");
    if (std::any_of(upper.begin(), upper.end(), [&](int u) { return u < lower; }))
        return;
    std::vector<int> gaps(r - 1, lower);
    std::vector<std::int64_t> values(r, 0);
    while (true) {
        for (std::size_t i = 1; i < r; ++i)
            values[i] = values[i - 1] + gaps[i - 1];
        visit(LambdaParam(values));
        std::size_t pos = gaps.size();
        while (true) {
            if (pos == 0)
                return;
            --pos;
            if (gaps[pos] < upper[pos]) {
                ++gaps[pos];
                break;
            }
            gaps[pos] = lower;
        }
    }
}

std::vector<LambdaParam> enumerate_lambdas(const ParabolicDatum& datum, int span)
{
    if (span < 0)
        throw Error(ErrorKind::PreconditionViolated, "span must be non-negative");
    std::vector<LambdaParam> out;
    const std::vector<int> upper(datum.r() - 1, span);
    for_each_lambda(datum.r(), -span, upper, [&](const LambdaParam& l) { out.push_back(l); });
    return out;
}

void SweepReport::add_statistic(const std::string& key, std::uint64_t amount)
{
    for (auto& [k, v] : statistics) {
        if (k == key) {
            v += amount;
            return;
        }
    }
    statistics.emplace_back(key, amount);
}

namespace {

bool precedes(const Counterexample& a, const Counterexample& b)
{
    if (a.datum != b.datum)
        return a.datum < b.datum;
    return a.lambda < b.lambda;
}

} // namespace

void SweepReport::record_failure(const ParabolicDatum& datum, const std::optional<LambdaParam>& lambda,
                                 std::string detail)
{
    ++disagreements;
    Counterexample c{datum, lambda, std::move(detail)};
    if (!first_counterexample || precedes(c, *first_counterexample))
        first_counterexample = std::move(c);
}

SweepReport merge(SweepReport a, const SweepReport& b)
{
    a.datums += b.datums;
    a.lambda_points += b.lambda_points;
    a.agreements += b.agreements;
    a.disagreements += b.disagreements;
    if (b.first_counterexample &&
        (!a.first_counterexample || precedes(*b.first_counterexample, *a.first_counterexample)))
        a.first_counterexample = b.first_counterexample;
    for (const auto& [k, v] : b.statistics)
        a.add_statistic(k, v);
    return a;
}

namespace {

// Runs work(datum, reports) over every datum, one report vector per thread,
// and merges the per-thread results slot by slot.
std::vector<SweepReport> run_sweep(int n_max, const SweepOptions& options, std::vector<SweepReport> blank,
                                   const std::function<void(const ParabolicDatum&, std::vector<SweepReport>&)>& work)
{
    const auto datums = enumerate_parabolics(n_max);
    const unsigned threads = std::max(1U, options.threads);
    std::vector<std::vector<SweepReport>> partial(threads, blank);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);

    auto worker = [&](unsigned t) {
        try {
            for (std::size_t k = next++; k < datums.size(); k = next++) {
                for (auto& rep : partial[t])
                    ++rep.datums;
                work(datums[k], partial[t]);
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker, t);
        for (auto& th : pool)
            th.join();
    }
    for (const auto& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }
    for (unsigned t = 1; t < threads; ++t) {
        for (std::size_t s = 0; s < blank.size(); ++s)
            partial[0][s] = merge(std::move(partial[0][s]), partial[t][s]);
    }
    return partial[0];
}

SweepReport blank_report(std::string name, int n_max, std::optional<int> span)
{
    SweepReport r;
    r.name = std::move(name);
    r.n_max = n_max;
    r.span = span;
    return r;
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw Error(ErrorKind::PreconditionViolated, what);
}

// [lo, hi] of the integers nu^{(i)} - (n-1)/2 for each block; blocks of nu are
// runs of consecutive values, so intersections are interval overlaps.
struct BlockIntervals {
    std::vector<std::int64_t> lo;
    std::vector<std::int64_t> hi;

    explicit BlockIntervals(const ParabolicDatum& datum) : lo(datum.r()), hi(datum.r()) {}

    void assign(const ParabolicDatum& datum, const LambdaParam& lambda)
    {
        for (std::size_t i = 1; i <= datum.r(); ++i) {
            hi[i - 1] = lambda.value(i) - static_cast<std::int64_t>(datum.offset(i));
            lo[i - 1] = hi[i - 1] - datum.n(i) + 1;
        }
    }

    int shared(std::size_t i, std::size_t j) const
    {
        const auto top = std::min(hi[i - 1], hi[j - 1]);
        const auto bottom = std::max(lo[i - 1], lo[j - 1]);
        return static_cast<int>(std::max<std::int64_t>(0, top - bottom + 1));
    }

    bool some_value_thrice() const
    {
        const std::size_t r = lo.size();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j)
                for (std::size_t k = j + 1; k < r; ++k)
                    if (std::min({hi[i], hi[j], hi[k]}) >= std::max({lo[i], lo[j], lo[k]}))
                        return true;
        return false;
    }
};

} // namespace

bool is_k_dominant_direct(const ParabolicDatum& datum, const Weight& weight)
{
    if (weight.size() != static_cast<std::size_t>(datum.n()))
        throw Error(ErrorKind::LengthMismatch, "weight length differs from n");
    std::optional<HalfInt> last_plus;
    std::optional<HalfInt> last_minus;
    std::size_t k = 0;
    for (std::size_t j = 1; j <= datum.r(); ++j) {
        for (int t = 0; t < datum.p(j); ++t, ++k) {
            if (last_plus && weight[k] > *last_plus)
                return false;
            last_plus = weight[k];
        }
        for (int t = 0; t < datum.q(j); ++t, ++k) {
            if (last_minus && weight[k] > *last_minus)
                return false;
            last_minus = weight[k];
        }
    }
    return true;
}

SweepReport sweep_overlap(int n_max, const SweepOptions& options)
{
    require(n_max >= 2, "sweep_overlap needs n_max >= 2");
    auto reports = run_sweep(n_max, options, {blank_report("overlap", n_max, std::nullopt)},
                             [](const ParabolicDatum& datum, std::vector<SweepReport>& out) {
        auto& rep = out[0];
        const auto t = build_signed_tableau(datum);
        if (auto why = t.structure_violation()) {
            rep.record_failure(datum, std::nullopt, "built tableau is malformed: " + *why);
            return;
        }
        for (int i = 1; i < static_cast<int>(datum.r()); ++i) {
            rep.add_statistic("adjacent_pairs", 1);
            const int def = overlap_by_definition(t, i);
            const int formula = overlap_by_formula(datum, i);
            if (def != formula) {
                rep.record_failure(datum, std::nullopt,
                                   "pair " + std::to_string(i) + ": definition " + std::to_string(def) +
                                       ", formula " + std::to_string(formula));
                return;
            }
        }
        ++rep.agreements;
    });
    return reports[0];
}

SweepReport sweep_positional_lemma(int n_max, const SweepOptions& options)
{
    require(n_max >= 2, "sweep_positional_lemma needs n_max >= 2");
    auto reports = run_sweep(n_max, options, {blank_report("positional", n_max, std::nullopt)},
                             [](const ParabolicDatum& datum, std::vector<SweepReport>& out) {
        auto& rep = out[0];
        const auto t = build_signed_tableau(datum);
        for (int i = 1; i < static_cast<int>(datum.r()); ++i) {
            const auto m = static_cast<std::size_t>(overlap_by_formula(datum, i));
            const auto n_i = t.block_size(i);
            for (std::size_t j = 1; j <= m; ++j) {
                rep.add_statistic("cell_pairs", 1);
                const Cell& upper_block = t.block_cell(i, n_i - m + j);
                const Cell& lower_block = t.block_cell(i + 1, j);
                if (upper_block.row < lower_block.row) {
                    rep.record_failure(datum, std::nullopt,
                                       "pair " + std::to_string(i) + ", j = " + std::to_string(j) +
                                           ": block " + std::to_string(i) + " cell in row " +
                                           std::to_string(upper_block.row) + " above row " +
                                           std::to_string(lower_block.row));
                    return;
                }
            }
        }
        ++rep.agreements;
    });
    return reports[0];
}

SweepReport sweep_dirac_equivalence(int n_max, int span, const SweepOptions& options)
{
    require(n_max >= 2, "sweep_dirac_equivalence needs n_max >= 2");
    require(span >= 0, "span must be non-negative");
    auto reports = run_sweep(n_max, options, {blank_report("dirac", n_max, span)},
                             [span](const ParabolicDatum& datum, std::vector<SweepReport>& out) {
        auto& rep = out[0];
        const std::size_t r = datum.r();
        std::vector<int> upper;
        for (int i = 1; i < static_cast<int>(r); ++i)
            upper.push_back(std::min(span, overlap_by_formula(datum, i)));
        FeasibilityProblem problem;
        for (const auto& bp : datum.pairs()) {
            problem.p.push_back(bp.p);
            problem.q.push_back(bp.q);
        }
        problem.r_adjacent.assign(r - 1, 0);
        BlockIntervals iv(datum);

        for_each_lambda(r, -span, upper, [&](const LambdaParam& lambda) {
            ++rep.lambda_points;
            const AqModule module(datum, lambda);
            if (!module.range().nice || !module.nonvanishing().holds) {
                rep.record_failure(datum, lambda, "grid point outside the nonzero nice range");
                return;
            }
            iv.assign(datum, lambda);
            for (std::size_t i = 1; i <= r; ++i) {
                for (std::size_t j = i + 1; j <= r; ++j) {
                    if (iv.shared(i, j) != module.r_table().general(i, j)) {
                        rep.record_failure(datum, lambda,
                                           "R_{" + std::to_string(i) + "," + std::to_string(j) + "} differs");
                        return;
                    }
                }
            }
            for (std::size_t i = 1; i < r; ++i)
                problem.r_adjacent[i - 1] = iv.shared(i, i + 1);

            const bool hp1 = !iv.some_value_thrice();
            const bool feasible = hp1 && solve_bruteforce(problem).has_value();
            const bool claimed = module.strengthened().satisfied;
            rep.add_statistic(hp1 ? "hp1_points" : "hp1_failures", 1);
            if (feasible != claimed) {
                rep.record_failure(datum, lambda,
                                   std::string("strengthened H.P. says ") + (claimed ? "true" : "false") +
                                       ", exhaustive search says " + (feasible ? "feasible" : "infeasible"));
                return;
            }
            if (feasible) {
                rep.add_statistic("feasible_points", 1);
                try {
                    const auto witness = dirac_constructive(module);
                    if (auto why = feasibility_violation(problem, witness)) {
                        rep.record_failure(datum, lambda, "constructed witness invalid: " + *why);
                        return;
                    }
                } catch (const Error& e) {
                    rep.record_failure(datum, lambda, std::string("construction failed: ") + e.what());
                    return;
                }
            }
            ++rep.agreements;
        });
    });
    return reports[0];
}

NiceRangeReports sweep_nice_range(int n_max, int span, const SweepOptions& options)
{
    require(n_max >= 2, "sweep_nice_range needs n_max >= 2");
    require(span >= 0, "span must be non-negative");
    std::vector<SweepReport> blank{
        blank_report("antitableau", n_max, span),
        blank_report("mediocre_agreement", n_max, span),
        blank_report("multiplicity_bounds", n_max, span),
        blank_report("k_dominance", n_max, span),
    };
    auto reports = run_sweep(n_max, options, blank, [span](const ParabolicDatum& datum, std::vector<SweepReport>& out) {
        auto& anti = out[0];
        auto& med = out[1];
        auto& mult = out[2];
        auto& kdom = out[3];
        const std::size_t r = datum.r();
        std::vector<int> upper;
        for (std::size_t i = 1; i < r; ++i)
            upper.push_back(std::min({span, datum.n(i), datum.n(i + 1)}));
        PartitionedTableau quasi = build_signed_tableau(datum);

        for_each_lambda(r, -span, upper, [&](const LambdaParam& lambda) {
            for (auto* rep : {&anti, &med, &kdom})
                ++rep->lambda_points;
            const AqModule module(datum, lambda);
            if (!module.range().nice) {
                anti.record_failure(datum, lambda, "grid point outside the nice range");
                return;
            }
            const bool nonzero = module.nonvanishing().holds;
            quasi.set_block_entries(module.nu().coords());
            const bool antitableau = is_antitableau(quasi);
            if (nonzero)
                anti.add_statistic("nonzero_points", 1);
            if (antitableau && !nonzero)
                anti.add_statistic("antitableau_but_vanishing", 1);
            if (nonzero && !antitableau)
                anti.record_failure(datum, lambda, "nonzero module but the quasitableau is not an antitableau");
            else
                ++anti.agreements;

            const auto necessary = mediocre_necessary_check(module, quasi);
            if (necessary.holds != nonzero)
                med.record_failure(datum, lambda,
                                   std::string("sing <= overlap check says ") + (necessary.holds ? "true" : "false") +
                                       ", nonvanishing says " + (nonzero ? "true" : "false"));
            else
                ++med.agreements;

            if (module.hp().hp1) {
                ++mult.lambda_points;
                const auto& table = module.r_table();
                std::optional<std::string> why;
                for (std::size_t i = 1; i <= r && !why; ++i) {
                    for (std::size_t j = i + 2; j <= r && !why; ++j) {
                        if (table.general(i, j) != 0)
                            why = "R_{" + std::to_string(i) + "," + std::to_string(j) + "} != 0";
                    }
                    const int left = i > 1 ? table.adjacent(i - 1) : 0;
                    const int right = i < r ? table.adjacent(i) : 0;
                    if (!why && left + right > datum.n(i))
                        why = "R_{i-1,i} + R_{i,i+1} > n_i at i = " + std::to_string(i);
                }
                if (why)
                    mult.record_failure(datum, lambda, *why);
                else
                    ++mult.agreements;
            }

            const auto kt = ktype_weight(datum, lambda);
            const bool direct = is_k_dominant_direct(datum, kt.weight);
            if (kt.k_dominant && !direct)
                kdom.record_failure(datum, lambda, "k_dominant is set but the weight is not dominant");
            else if (nonzero && !kt.k_dominant)
                kdom.record_failure(datum, lambda, "nonzero module with k_dominant false");
            else
                ++kdom.agreements;
            if (direct && !kt.k_dominant)
                kdom.add_statistic("dominant_but_flag_false", 1);
        });
    });
    return {reports[0], reports[1], reports[2], reports[3]};
}

SweepReport sweep_range_ladder(int n_max, int span, const SweepOptions& options)
{
    require(n_max >= 1, "sweep_range_ladder needs n_max >= 1");
    require(span >= 0, "span must be non-negative");
    auto reports = run_sweep(n_max, options, {blank_report("range_ladder", n_max, span)},
                             [span](const ParabolicDatum& datum, std::vector<SweepReport>& out) {
        auto& rep = out[0];
        const std::vector<int> upper(datum.r() - 1, span);
        for_each_lambda(datum.r(), -span, upper, [&](const LambdaParam& lambda) {
            ++rep.lambda_points;
            const auto rc = classify(datum, lambda);
            rep.add_statistic(std::string(to_string(rc.label)), 1);
            const char* why = nullptr;
            if (rc.good && !rc.weakly_good)
                why = "good but not weakly good";
            else if (rc.weakly_good && !rc.nice)
                why = "weakly good but not nice";
            else if (rc.nice && !rc.weakly_fair)
                why = "nice but not weakly fair";
            else if (rc.fair && !rc.weakly_fair)
                why = "fair but not weakly fair";
            else if (rc.weakly_fair && !rc.mediocre)
                why = "weakly fair but not mediocre";
            else {
                const std::pair<bool, RangeLabel> order[] = {
                    {rc.good, RangeLabel::Good}, {rc.weakly_good, RangeLabel::WeaklyGood},
                    {rc.nice, RangeLabel::Nice}, {rc.fair, RangeLabel::Fair},
                    {rc.weakly_fair, RangeLabel::WeaklyFair}, {rc.mediocre, RangeLabel::Mediocre},
                };
                RangeLabel expected = RangeLabel::None;
                for (const auto& [flag, label] : order) {
                    if (flag) {
                        expected = label;
                        break;
                    }
                }
                if (expected != rc.label)
                    why = "label does not match the flags";
                else if (classify(datum, lambda.translated(1)) != rc ||
                         classify(datum, lambda.translated(-span - 3)) != rc)
                    why = "classification changes under translation";
            }
            if (why)
                rep.record_failure(datum, lambda, why);
            else
                ++rep.agreements;
        });
    });
    return reports[0];
}

} // namespace aqtab
