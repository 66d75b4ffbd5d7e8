#pragma once

// Domain types shared by every module: the parabolic datum {(p_i, q_i)},
// the integral character lambda, and weights in the diagonal torus of U(p,q).
//
// Block indices are 1-based throughout the public API (block i of a datum,
// the pair (i, i+1), the window (k, l)), matching the block labels carried by
// tableau cells. Container accessors such as pairs() are ordinary 0-based
// ranges.

#include "aqtab/half_int.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aqtab {

enum class ErrorKind {
    EmptyDatum,
    ZeroPair,
    LengthMismatch,
    BlockOutOfRange,
    MissingEntries,
    NotInNiceRange,
    NotInMediocreRange,
    PreconditionViolated,
    ModuleVanishes,
    InternalContradiction,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct BlockPair {
    int p = 0;
    int q = 0;

    constexpr int n() const noexcept { return p + q; }
    friend constexpr auto operator<=>(const BlockPair&, const BlockPair&) = default;
};

class ParabolicDatum {
public:
    // Throws EmptyDatum / ZeroPair; negative entries are reported as ZeroPair.
    explicit ParabolicDatum(std::vector<BlockPair> pairs);
    ParabolicDatum(std::initializer_list<BlockPair> pairs)
        : ParabolicDatum(std::vector<BlockPair>(pairs))
    {
    }

    std::span<const BlockPair> pairs() const noexcept { return pairs_; }
    std::size_t r() const noexcept { return pairs_.size(); }

    int p(std::size_t i) const { return at(i).p; }
    int q(std::size_t i) const { return at(i).q; }
    int n(std::size_t i) const { return at(i).n(); }
    int p() const noexcept { return p_total_; }
    int q() const noexcept { return q_total_; }
    int n() const noexcept { return p_total_ + q_total_; }

    // 0-based coordinate offset of block i.
    std::size_t offset(std::size_t i) const
    {
        at(i);
        return offsets_[i - 1];
    }

    std::string to_string() const; // "[(2,1),(3,1),(0,2)]"

    friend auto operator<=>(const ParabolicDatum& a, const ParabolicDatum& b)
    {
        return a.pairs_ <=> b.pairs_;
    }
    friend bool operator==(const ParabolicDatum& a, const ParabolicDatum& b)
    {
        return a.pairs_ == b.pairs_;
    }

private:
    const BlockPair& at(std::size_t i) const
    {
        if (i < 1 || i > pairs_.size())
            out_of_range(i);
        return pairs_[i - 1];
    }
    [[noreturn]] void out_of_range(std::size_t i) const;

    std::vector<BlockPair> pairs_;
    std::vector<std::size_t> offsets_;
    int p_total_ = 0;
    int q_total_ = 0;
};

class LambdaParam {
public:
    LambdaParam() = default;
    explicit LambdaParam(std::vector<std::int64_t> values) : values_(std::move(values)) {}
    LambdaParam(std::initializer_list<std::int64_t> values) : values_(values) {}

    std::span<const std::int64_t> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::int64_t value(std::size_t i) const
    {
        if (i < 1 || i > values_.size())
            out_of_range(i);
        return values_[i - 1];
    }
    // lambda_{i+1} - lambda_i
    std::int64_t gap(std::size_t i) const { return value(i + 1) - value(i); }

    LambdaParam translated(std::int64_t c) const;
    std::string to_string() const; // "(0,2,4)"

    friend bool operator==(const LambdaParam&, const LambdaParam&) = default;
    friend auto operator<=>(const LambdaParam&, const LambdaParam&) = default;

private:
    [[noreturn]] static void out_of_range(std::size_t i);
    std::vector<std::int64_t> values_;
};

class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<HalfInt> coords) : coords_(std::move(coords)) {}

    std::span<const HalfInt> coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    HalfInt operator[](std::size_t k) const { return coords_[k]; }

    // Coordinates nu^{(i)}_1 .. nu^{(i)}_{n_i} of block i.
    std::span<const HalfInt> block(const ParabolicDatum& datum, std::size_t i) const
    {
        const auto off = datum.offset(i);
        const auto len = static_cast<std::size_t>(datum.n(i));
        if (off + len > coords_.size())
            too_short();
        return std::span<const HalfInt>(coords_).subspan(off, len);
    }

    std::string to_string() const;

    friend bool operator==(const Weight&, const Weight&) = default;

private:
    [[noreturn]] static void too_short();
    std::vector<HalfInt> coords_;
};

struct ValidatedInput {
    ParabolicDatum datum;
    LambdaParam lambda;
};

// Checks the lambda length against the datum; datum invariants are already
// enforced by its constructor.
ValidatedInput validate_input(const ParabolicDatum& datum, const LambdaParam& lambda);
// The same check without copying the input.
void check_lengths(const ParabolicDatum& datum, const LambdaParam& lambda);
ValidatedInput validate_input(std::vector<BlockPair> pairs, std::vector<std::int64_t> lambda);

} // namespace aqtab
