#include "aqtab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace aqtab {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

std::int64_t parse_int(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
        throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
    return v;
}

int parse_small(std::string_view text)
{
    const auto v = parse_int(text);
    if (v < -1'000'000 || v > 1'000'000)
        throw Error(ErrorKind::ParseError, "block size out of range: " + std::to_string(v));
    return static_cast<int>(v);
}

std::int64_t json_int(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        throw Error(ErrorKind::ParseError, std::string(what) + " must be an integer, got " + j.dump());
    return j.get<std::int64_t>();
}

} // namespace

std::vector<BlockPair> parse_pairs_flag(std::string_view text)
{
    std::vector<BlockPair> pairs;
    if (trim(text).empty())
        return pairs;
    for (auto item : split(text, ';')) {
        const auto parts = split(item, ',');
        if (parts.size() != 2)
            throw Error(ErrorKind::ParseError, "pair '" + std::string(trim(item)) + "' is not of the form p,q");
        pairs.push_back({parse_small(parts[0]), parse_small(parts[1])});
    }
    return pairs;
}

std::vector<std::int64_t> parse_lambda_flag(std::string_view text)
{
    std::vector<std::int64_t> values;
    if (trim(text).empty())
        return values;
    for (auto item : split(text, ','))
        values.push_back(parse_int(item));
    return values;
}

InputDocument parse_input_json(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!j.is_object())
        throw Error(ErrorKind::ParseError, "input must be a JSON object");
    if (!j.contains("pairs") || !j["pairs"].is_array())
        throw Error(ErrorKind::ParseError, "input needs a \"pairs\" array");
    InputDocument doc;
    for (const auto& pr : j["pairs"]) {
        if (!pr.is_array() || pr.size() != 2)
            throw Error(ErrorKind::ParseError, "each pair must be [p, q], got " + pr.dump());
        const auto p = json_int(pr[0], "p");
        const auto q = json_int(pr[1], "q");
        if (p < -1'000'000 || p > 1'000'000 || q < -1'000'000 || q > 1'000'000)
            throw Error(ErrorKind::ParseError, "block size out of range in " + pr.dump());
        doc.pairs.push_back({static_cast<int>(p), static_cast<int>(q)});
    }
    if (j.contains("lambda") && !j["lambda"].is_null()) {
        if (!j["lambda"].is_array())
            throw Error(ErrorKind::ParseError, "\"lambda\" must be an array");
        std::vector<std::int64_t> lambda;
        for (const auto& v : j["lambda"])
            lambda.push_back(json_int(v, "lambda entry"));
        doc.lambda = std::move(lambda);
    }
    return doc;
}

ValidatedInput to_validated(const InputDocument& doc)
{
    if (!doc.lambda)
        throw Error(ErrorKind::ParseError, "lambda is required");
    return validate_input(doc.pairs, *doc.lambda);
}

Json to_json(HalfInt v)
{
    return Json{{"doubled", v.doubled()}};
}

Json to_json(const Weight& w)
{
    Json out = Json::array();
    for (const auto v : w.coords())
        out.push_back(to_json(v));
    return out;
}

Json to_json(const ParabolicDatum& d)
{
    Json out = Json::array();
    for (const auto& bp : d.pairs())
        out.push_back(Json::array({bp.p, bp.q}));
    return out;
}

Json to_json(const LambdaParam& l)
{
    Json out = Json::array();
    for (const auto v : l.values())
        out.push_back(v);
    return out;
}

Json to_json(const InputDocument& doc)
{
    Json out;
    out["pairs"] = Json::array();
    for (const auto& bp : doc.pairs)
        out["pairs"].push_back(Json::array({bp.p, bp.q}));
    out["lambda"] = doc.lambda ? Json(*doc.lambda) : Json(nullptr);
    return out;
}

Json to_json(const RangeClass& rc)
{
    Json out;
    out["label"] = std::string(to_string(rc.label));
    out["good"] = rc.good;
    out["weakly_good"] = rc.weakly_good;
    out["nice"] = rc.nice;
    out["fair"] = rc.fair;
    out["weakly_fair"] = rc.weakly_fair;
    out["mediocre"] = rc.mediocre;
    return out;
}

Json to_json(const FeasibilitySolution& s)
{
    Json out;
    out["a"] = s.a;
    out["b"] = s.b;
    return out;
}

Json to_json(const Verdict& v)
{
    Json out;
    out["nonzero_module"] = v.nonzero_module;
    out["hp1"] = v.hp1;
    out["hp2_original"] = v.hp2_original;
    out["strengthened_hp"] = v.strengthened_hp;
    out["dirac_index_nonzero"] = v.dirac_index_nonzero ? Json(*v.dirac_index_nonzero) : Json(nullptr);
    out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    out["failing_window"] =
        v.failing_window ? Json::array({v.failing_window->k, v.failing_window->l}) : Json(nullptr);
    out["failure_site"] = v.failure_site ? Json(*v.failure_site) : Json(nullptr);
    return out;
}

Json to_json(const Counterexample& c)
{
    Json out;
    out["pairs"] = to_json(c.datum);
    out["lambda"] = c.lambda ? to_json(*c.lambda) : Json(nullptr);
    out["detail"] = c.detail;
    return out;
}

Json to_json(const SweepReport& r)
{
    Json out;
    out["name"] = r.name;
    out["n_max"] = r.n_max;
    out["span"] = r.span ? Json(*r.span) : Json(nullptr);
    out["datums"] = r.datums;
    out["lambda_points"] = r.lambda_points;
    out["agreements"] = r.agreements;
    out["disagreements"] = r.disagreements;
    out["first_counterexample"] = r.first_counterexample ? to_json(*r.first_counterexample) : Json(nullptr);
    Json stats = Json::object();
    for (const auto& [k, v] : r.statistics)
        stats[k] = v;
    out["statistics"] = stats;
    return out;
}

Json to_json(const PartitionedTableau& t)
{
    Json out;
    out["blocks"] = t.block_count();
    out["shape"] = t.shape();
    if (t.has_signs())
        out["sign_rows"] = t.sign_rows();
    if (t.has_entries()) {
        Json rows = Json::array();
        for (std::size_t k = 1; k <= t.row_count(); ++k) {
            Json row = Json::array();
            for (const auto& c : t.row(k))
                row.push_back(c.entry->to_string());
            rows.push_back(row);
        }
        out["entry_rows"] = rows;
    }
    Json cells = Json::array();
    for (const auto& c : t.cells()) {
        Json cell;
        cell["row"] = c.row;
        cell["col"] = c.col;
        cell["sign"] = c.sign ? Json(std::string(1, to_char(*c.sign))) : Json(nullptr);
        cell["entry"] = c.entry ? to_json(*c.entry) : Json(nullptr);
        cell["block"] = c.block;
        cells.push_back(cell);
    }
    out["cells"] = cells;
    return out;
}

std::string_view describe(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::EmptyDatum: return "empty datum";
    case ErrorKind::ZeroPair: return "zero pair";
    case ErrorKind::LengthMismatch: return "length mismatch";
    case ErrorKind::BlockOutOfRange: return "block out of range";
    case ErrorKind::MissingEntries: return "missing entries";
    case ErrorKind::NotInNiceRange: return "not in nice range";
    case ErrorKind::NotInMediocreRange: return "not in mediocre range";
    case ErrorKind::PreconditionViolated: return "precondition violated";
    case ErrorKind::ModuleVanishes: return "module vanishes";
    case ErrorKind::InternalContradiction: return "internal contradiction";
    case ErrorKind::ParseError: return "parse error";
    }
    return "error";
}

Json error_json(ErrorKind kind, std::string_view message)
{
    Json body;
    body["kind"] = std::string(to_string(kind));
    body["summary"] = std::string(describe(kind));
    body["message"] = std::string(message);
    return Json{{"error", body}};
}

namespace {

std::string cell_text(const Cell& c)
{
    if (c.entry)
        return c.entry->to_string();
    return c.sign ? std::string(1, to_char(*c.sign)) : std::string(".");
}

std::string pad_left(const std::string& s, std::size_t width)
{
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

std::string latex_value(const Cell& c)
{
    if (!c.entry)
        return c.sign ? std::string(1, to_char(*c.sign)) : std::string();
    const auto d = c.entry->doubled();
    if (c.entry->is_integral())
        return std::to_string(d / 2);
    return std::string(d < 0 ? "-" : "") + "\\tfrac{" + std::to_string(d < 0 ? -d : d) + "}{2}";
}

} // namespace

std::string render_ascii(const PartitionedTableau& t, bool show_blocks)
{
    std::size_t width = 1;
    for (const auto& c : t.cells()) {
        width = std::max(width, cell_text(c).size());
        if (show_blocks)
            width = std::max(width, std::to_string(c.block).size());
    }
    std::ostringstream os;
    for (std::size_t k = 1; k <= t.row_count(); ++k) {
        std::string line;
        std::string blocks;
        for (const auto& c : t.row(k)) {
            if (!line.empty()) {
                line += ' ';
                blocks += ' ';
            }
            line += pad_left(cell_text(c), width);
            blocks += pad_left(std::to_string(c.block), width);
        }
        os << line << '\n';
        if (show_blocks)
            os << blocks << '\n';
    }
    return os.str();
}

std::string render_latex(const PartitionedTableau& t, bool show_blocks)
{
    const std::size_t cols = t.row_count() == 0 ? 0 : static_cast<std::size_t>(t.row_length(1));
    std::ostringstream os;
    os << "\\begin{array}{" << std::string(cols, 'c') << "}\n";
    for (std::size_t k = 1; k <= t.row_count(); ++k) {
        std::string line;
        for (const auto& c : t.row(k)) {
            if (!line.empty())
                line += " & ";
            line += latex_value(c);
            if (show_blocks)
                line += "_{" + std::to_string(c.block) + "}";
        }
        os << line << (k < t.row_count() ? " \\\\\n" : "\n");
    }
    os << "\\end{array}\n";
    return os.str();
}

} // namespace aqtab
