// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
//
//   acceptance [--threads N] [--only K]

#include "aqtab/combinatorics.hpp"
#include "aqtab/criteria.hpp"
#include "aqtab/io.hpp"
#include "aqtab/oracle.hpp"
#include "aqtab/tableau.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

using namespace aqtab;

namespace {

using Clock = std::chrono::steady_clock;

volatile std::size_t sink = 0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Median wall time of `runs` calls, in milliseconds.
double median_ms(const std::function<void()>& f, int runs = 101)
{
    std::vector<double> t;
    for (int k = 0; k < runs; ++k) {
        const auto start = Clock::now();
        f();
        t.push_back(seconds_since(start) * 1e3);
    }
    std::nth_element(t.begin(), t.begin() + runs / 2, t.end());
    return t[runs / 2];
}

std::string fmt_ms(double ms)
{
    std::ostringstream os;
    os.precision(3);
    os << ms << " ms";
    return os.str();
}

std::string fmt_s(double s)
{
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << s << " s";
    return os.str();
}

std::string summary(const SweepReport& r)
{
    std::ostringstream os;
    os << r.datums << " datums, ";
    if (r.lambda_points > 0)
        os << r.lambda_points << " points, ";
    for (const auto& [key, value] : r.statistics)
        os << key << " " << value << ", ";
    os << r.agreements << " agreements, " << r.disagreements << " disagreements";
    if (r.first_counterexample)
        os << "; first: " << to_json(*r.first_counterexample).dump();
    return os.str();
}

std::string entry_rows(const PartitionedTableau& t)
{
    std::string out;
    for (std::size_t k = 1; k <= t.row_count(); ++k) {
        out += '(';
        for (const auto& c : t.row(k)) {
            if (out.back() != '(')
                out += ',';
            out += c.entry->to_string();
        }
        out += ')';
    }
    return out;
}

const ParabolicDatum example{{2, 1}, {3, 1}, {0, 2}};

Outcome signed_tableau_golden()
{
    const auto t = build_signed_tableau(example);
    const auto ms = median_ms([] { sink = sink + build_signed_tableau(example).size(); });
    const bool shape = t.shape() == std::vector<int>{3, 2, 2, 1, 1};
    const bool rows = t.sign_rows() == std::vector<std::string>{"-+-", "+-", "+-", "+", "+"};
    std::string got;
    for (const auto& s : t.sign_rows())
        got += s + ' ';
    return {shape && rows && ms < 1.0, "rows " + got + "in " + fmt_ms(ms) + " (limit 1 ms)"};
}

Outcome quasitableau_golden()
{
    const auto q = build_quasitableau(example, {0, 2, 4});
    const auto ms = median_ms([] { sink = sink + build_quasitableau(example, {0, 2, 4}).size(); });
    const bool rows = entry_rows(q) == "(4,3,1)(3,2)(2,0)(1)(0)";
    const bool anti = is_antitableau(q);
    const bool anti_prime = is_antitableau(build_quasitableau(example, {0, 3, 4}));
    return {rows && anti && !anti_prime && ms < 1.0,
            "rows " + entry_rows(q) + ", antitableau " + (anti ? "true" : "false") + ", with (0,3,4) " +
                (anti_prime ? "true" : "false") + ", in " + fmt_ms(ms) + " (limit 1 ms)"};
}

Outcome overlap_singularity_golden()
{
    const LambdaParam lambda{0, 2, 4};
    const auto t = build_signed_tableau(example);
    const auto q = build_quasitableau(example, lambda);
    const auto table = r_table(example, lambda);
    std::ostringstream os;
    bool pass = true;
    for (int i = 1; i <= 2; ++i) {
        const int def = overlap_by_definition(t, i);
        const int formula = overlap_by_formula(example, i);
        const int sing = singularity(q, i);
        const int from_gap = static_cast<int>(std::max<std::int64_t>(0, lambda.gap(i)));
        const int from_table = table.adjacent(i);
        pass = pass && def == 2 && formula == 2 && sing == 2 && from_gap == 2 && from_table == 2;
        os << "pair " << i << ": overlap " << def << "/" << formula << ", sing " << sing << "/" << from_gap << "/"
           << from_table << "; ";
    }
    return {pass, os.str()};
}

Outcome from_report(const SweepReport& r, double secs, double target_s)
{
    std::string d = summary(r) + ", " + fmt_s(secs);
    if (target_s > 0)
        d += secs <= target_s ? " (target " + fmt_s(target_s) + " met)" : " (over target " + fmt_s(target_s) + ")";
    return {r.clean(), d};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria"};
    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    int only = 0;
    app.add_option("--threads", threads, "worker threads for the sweeps")->check(CLI::Range(1U, 256U));
    app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);
    const SweepOptions options{threads};

    int failures = 0;
    auto report = [&](int k, const Outcome& o) {
        if (!o.pass)
            ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << k << "  " << o.detail << std::endl;
    };
    auto run = [&](int k, const std::function<Outcome()>& f) {
        if (only != 0 && only != k)
            return;
        try {
            report(k, f());
        } catch (const std::exception& e) {
            report(k, {false, std::string("exception: ") + e.what()});
        }
    };
    auto timed = [&](const std::function<SweepReport()>& f, double target_s) {
        return [f, target_s]() {
            const auto start = Clock::now();
            const auto r = f();
            return from_report(r, seconds_since(start), target_s);
        };
    };

    run(1, signed_tableau_golden);
    run(2, quasitableau_golden);
    run(3, overlap_singularity_golden);
    run(4, timed([&] { return sweep_overlap(8, options); }, 60));
    run(5, timed([&] { return sweep_dirac_equivalence(7, 9, options); }, 300));
    run(6, timed([&] { return sweep_positional_lemma(8, options); }, 0));

    if (only == 0 || (only >= 7 && only <= 9)) {
        try {
            const auto start = Clock::now();
            const auto nice = sweep_nice_range(7, 9, options);
            const auto secs = seconds_since(start);
            auto both = from_report(nice.antitableau, secs, 0);
            const auto med = from_report(nice.mediocre_agreement, secs, 0);
            both.pass = both.pass && med.pass;
            both.detail = "antitableau: " + summary(nice.antitableau) +
                          "; sing <= overlap agreement: " + summary(nice.mediocre_agreement) + ", " + fmt_s(secs);
            run(7, [&] { return both; });
            run(8, [&] { return from_report(nice.multiplicity_bounds, secs, 0); });
            run(9, [&] { return from_report(nice.k_dominance, secs, 0); });
        } catch (const std::exception& e) {
            for (int k = 7; k <= 9; ++k)
                run(k, [&] { return Outcome{false, std::string("exception: ") + e.what()}; });
        }
    }

    run(10, timed([&] { return sweep_range_ladder(6, 6, options); }, 0));

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
