// aqtab: signed tableaux, non-vanishing and Dirac index criteria for A_q(lambda)
// of U(p,q), from the command line.
//
// Exit codes: 0 affirmative or clean, 1 negative (vanishes, index zero,
// counterexample found), 2 invalid input or undecidable.

#include "aqtab/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

using namespace aqtab;

namespace {

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kInvalid = 2;

struct InputFlags {
    std::string input;
    std::string pairs;
    std::string lambda;
};

void add_input_flags(CLI::App* cmd, InputFlags& flags)
{
    cmd->add_option("--input", flags.input, "JSON input file, or - for stdin");
    cmd->add_option("--pairs", flags.pairs, "block sizes, e.g. \"2,1;3,1;0,2\"");
    cmd->add_option("--lambda", flags.lambda, "lambda, e.g. \"0,2,4\"");
}

InputDocument read_input(const InputFlags& flags)
{
    if (!flags.input.empty()) {
        if (!flags.pairs.empty() || !flags.lambda.empty())
            throw Error(ErrorKind::ParseError, "use either --input or --pairs/--lambda");
        std::string text;
        if (flags.input == "-") {
            text.assign(std::istreambuf_iterator<char>(std::cin), {});
        } else {
            std::ifstream in(flags.input);
            if (!in)
                throw Error(ErrorKind::ParseError, "cannot open " + flags.input);
            text.assign(std::istreambuf_iterator<char>(in), {});
        }
        return parse_input_json(text);
    }
    if (flags.pairs.empty())
        throw Error(ErrorKind::ParseError, "no input: give --input or --pairs");
    InputDocument doc;
    doc.pairs = parse_pairs_flag(flags.pairs);
    if (!flags.lambda.empty())
        doc.lambda = parse_lambda_flag(flags.lambda);
    return doc;
}

void emit(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

int fail(const Error& e, int code)
{
    emit(error_json(e.kind(), e.what()));
    return code;
}

int cmd_build(const InputFlags& flags, const std::string& format, bool show_blocks)
{
    const auto doc = read_input(flags);
    const ParabolicDatum datum(doc.pairs);
    const auto signed_tableau = build_signed_tableau(datum);
    std::optional<PartitionedTableau> quasi;
    if (doc.lambda) {
        const LambdaParam lambda(*doc.lambda);
        check_lengths(datum, lambda);
        quasi = build_quasitableau(datum, lambda);
    }

    if (format == "json") {
        Json out;
        out["input"] = to_json(doc);
        out["signed_tableau"] = to_json(signed_tableau);
        out["quasitableau"] = quasi ? to_json(*quasi) : Json(nullptr);
        emit(out);
    } else if (format == "latex") {
        std::cout << "% signed tableau\n" << render_latex(signed_tableau, show_blocks);
        if (quasi)
            std::cout << "% quasitableau\n" << render_latex(*quasi, show_blocks);
    } else {
        std::cout << "signed tableau\n" << render_ascii(signed_tableau, show_blocks);
        if (quasi)
            std::cout << "\nquasitableau\n" << render_ascii(*quasi, show_blocks);
    }
    return kAffirmative;
}

int cmd_classify(const InputFlags& flags)
{
    const auto in = to_validated(read_input(flags));
    emit(to_json(classify(in.datum, in.lambda)));
    return kAffirmative;
}

int cmd_nonvanishing(const InputFlags& flags)
{
    const auto in = to_validated(read_input(flags));
    const AqModule module(in.datum, in.lambda);
    const auto& range = module.range();
    if (!range.mediocre)
        throw Error(ErrorKind::NotInMediocreRange, "lambda = " + in.lambda.to_string() + " is not mediocre");

    Json out;
    out["range"] = std::string(to_string(range.label));
    int code = kAffirmative;
    if (range.nice) {
        const auto& c = module.nonvanishing();
        out["method"] = "nice_criterion";
        out["verdict"] = c.holds ? "nonzero" : "vanishes";
        out["nonzero"] = c.holds;
        out["failing_pair"] = c.failing_pair ? Json(*c.failing_pair) : Json(nullptr);
        code = c.holds ? kAffirmative : kNegative;
    } else {
        const auto quasi = build_quasitableau(in.datum, in.lambda);
        const auto c = mediocre_necessary_check(module, quasi);
        out["method"] = "sing_le_overlap";
        out["verdict"] = c.holds ? "inconclusive" : "vanishes";
        out["nonzero"] = c.holds ? Json(nullptr) : Json(false);
        out["failing_pair"] = c.failing_pair ? Json(*c.failing_pair) : Json(nullptr);
        code = c.holds ? kInvalid : kNegative;
    }
    emit(out);
    return code;
}

int cmd_dirac(const InputFlags& flags)
{
    const auto in = to_validated(read_input(flags));
    try {
        const auto v = dirac_index_nonzero(in.datum, in.lambda);
        emit(to_json(v));
        return v.dirac_index_nonzero.value_or(false) ? kAffirmative : kNegative;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ModuleVanishes)
            return fail(e, kNegative);
        throw;
    }
}

int cmd_verify(const std::string& which, int n_max, std::optional<int> span, unsigned threads)
{
    const int s = span.value_or(n_max + 2);
    const SweepOptions options{threads};
    std::vector<SweepReport> reports;
    const bool all = which == "all";
    if (all || which == "overlap")
        reports.push_back(sweep_overlap(n_max, options));
    if (all || which == "positional")
        reports.push_back(sweep_positional_lemma(n_max, options));
    if (all || which == "dirac")
        reports.push_back(sweep_dirac_equivalence(n_max, s, options));
    if (all || which == "nice") {
        auto nice = sweep_nice_range(n_max, s, options);
        for (auto* r : {&nice.antitableau, &nice.mediocre_agreement, &nice.multiplicity_bounds, &nice.k_dominance})
            reports.push_back(std::move(*r));
    }
    if (all || which == "ladder")
        reports.push_back(sweep_range_ladder(n_max, s, options));

    bool clean = true;
    Json out;
    out["reports"] = Json::array();
    for (const auto& r : reports) {
        clean = clean && r.disagreements == 0;
        out["reports"].push_back(to_json(r));
    }
    out["clean"] = clean;
    emit(out);
    return clean ? kAffirmative : kNegative;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Signed tableaux, non-vanishing and Dirac index of A_q(lambda) for U(p,q)"};
    app.require_subcommand(1);

    InputFlags flags;
    std::string format = "ascii";
    bool show_blocks = false;
    auto* build = app.add_subcommand("build", "signed tableau and nu-quasitableau");
    add_input_flags(build, flags);
    build->add_option("--format", format, "ascii, latex or json")->check(CLI::IsMember({"ascii", "latex", "json"}));
    build->add_flag("--show-blocks", show_blocks, "mark the skew column of every cell");

    auto* classify_cmd = app.add_subcommand("classify", "range of lambda");
    add_input_flags(classify_cmd, flags);
    auto* nonvanishing = app.add_subcommand("nonvanishing", "is A_q(lambda) nonzero");
    add_input_flags(nonvanishing, flags);
    auto* dirac = app.add_subcommand("dirac", "is the Dirac index of A_q(lambda) nonzero");
    add_input_flags(dirac, flags);

    std::string which = "all";
    int n_max = 4;
    std::optional<int> span;
    unsigned threads = 1;
    auto* verify = app.add_subcommand("verify", "exhaustive sweeps against brute-force oracles");
    const std::vector<std::string> sweeps{"overlap", "positional", "dirac", "nice", "ladder", "all"};
    verify->add_option("which,--which", which, "sweep to run")->check(CLI::IsMember(sweeps));
    verify->add_option("--n-max", n_max, "largest n = p + q")->check(CLI::Range(2, 12));
    verify->add_option("--span", span, "lambda gaps range over [-span, span]; default n-max + 2")
        ->check(CLI::Range(0, 64));
    verify->add_option("--threads", threads, "worker threads")->check(CLI::Range(1U, 256U));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        emit(error_json(ErrorKind::ParseError, e.what()));
        return kInvalid;
    }

    try {
        if (*build)
            return cmd_build(flags, format, show_blocks);
        if (*classify_cmd)
            return cmd_classify(flags);
        if (*nonvanishing)
            return cmd_nonvanishing(flags);
        if (*dirac)
            return cmd_dirac(flags);
        if (*verify)
            return cmd_verify(which, n_max, span, threads);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return fail(e, kInvalid);
    }
    return kInvalid;
}
