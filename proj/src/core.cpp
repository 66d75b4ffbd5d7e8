#include "aqtab/core.hpp"

#include <sstream>

namespace aqtab {

std::string HalfInt::to_string() const
{
    if (is_integral())
        return std::to_string(doubled_ / 2);
    return std::to_string(doubled_) + "/2";
}

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::EmptyDatum: return "EmptyDatum";
    case ErrorKind::ZeroPair: return "ZeroPair";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::BlockOutOfRange: return "BlockOutOfRange";
    case ErrorKind::MissingEntries: return "MissingEntries";
    case ErrorKind::NotInNiceRange: return "NotInNiceRange";
    case ErrorKind::NotInMediocreRange: return "NotInMediocreRange";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ModuleVanishes: return "ModuleVanishes";
    case ErrorKind::InternalContradiction: return "InternalContradiction";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message)
    , kind_(kind)
{
}

ParabolicDatum::ParabolicDatum(std::vector<BlockPair> pairs) : pairs_(std::move(pairs))
{
    if (pairs_.empty())
        throw Error(ErrorKind::EmptyDatum, "a parabolic datum needs at least one pair");
    offsets_.reserve(pairs_.size());
    std::size_t offset = 0;
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        const auto& bp = pairs_[k];
        if (bp.p < 0 || bp.q < 0 || bp.n() == 0)
            throw Error(ErrorKind::ZeroPair,
                        "pair " + std::to_string(k + 1) + " is (" + std::to_string(bp.p) + "," +
                            std::to_string(bp.q) + ")");
        offsets_.push_back(offset);
        offset += static_cast<std::size_t>(bp.n());
        p_total_ += bp.p;
        q_total_ += bp.q;
    }
}

void ParabolicDatum::out_of_range(std::size_t i) const
{
    throw Error(ErrorKind::BlockOutOfRange,
                "block " + std::to_string(i) + " not in 1.." + std::to_string(pairs_.size()));
}

std::string ParabolicDatum::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        if (k)
            os << ',';
        os << '(' << pairs_[k].p << ',' << pairs_[k].q << ')';
    }
    os << ']';
    return os.str();
}

void LambdaParam::out_of_range(std::size_t i)
{
    throw Error(ErrorKind::BlockOutOfRange, "lambda index " + std::to_string(i));
}

LambdaParam LambdaParam::translated(std::int64_t c) const
{
    auto v = values_;
    for (auto& x : v)
        x += c;
    return LambdaParam(std::move(v));
}

std::string LambdaParam::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (k)
            os << ',';
        os << values_[k];
    }
    os << ')';
    return os.str();
}

void Weight::too_short()
{
    throw Error(ErrorKind::LengthMismatch, "weight shorter than datum");
}

std::string Weight::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (k)
            os << ',';
        os << coords_[k].to_string();
    }
    os << ')';
    return os.str();
}

void check_lengths(const ParabolicDatum& datum, const LambdaParam& lambda)
{
    if (lambda.size() != datum.r())
        throw Error(ErrorKind::LengthMismatch,
                    "lambda has " + std::to_string(lambda.size()) + " values, datum has " +
                        std::to_string(datum.r()) + " blocks");
}

ValidatedInput validate_input(const ParabolicDatum& datum, const LambdaParam& lambda)
{
    check_lengths(datum, lambda);
    return {datum, lambda};
}

ValidatedInput validate_input(std::vector<BlockPair> pairs, std::vector<std::int64_t> lambda)
{
    ParabolicDatum datum(std::move(pairs));
    return validate_input(datum, LambdaParam(std::move(lambda)));
}

} // namespace aqtab
