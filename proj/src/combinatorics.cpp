#include "aqtab/combinatorics.hpp"

#include "aqtab/ranges.hpp"

#include <algorithm>

namespace aqtab {

void RTable::out_of_range(std::size_t i, std::size_t j) const
{
    throw Error(ErrorKind::BlockOutOfRange,
                "R_{" + std::to_string(i) + "," + std::to_string(j) + "} with r = " + std::to_string(r_));
}

void RTable::set(std::size_t i, std::size_t j, int value)
{
    general(i, j);
    values_[(i - 1) * r_ + (j - 1)] = value;
    values_[(j - 1) * r_ + (i - 1)] = value;
}

std::vector<int> RTable::adjacent_values() const
{
    std::vector<int> out;
    out.reserve(r_ > 0 ? r_ - 1 : 0);
    for (std::size_t i = 1; i < r_; ++i)
        out.push_back(adjacent(i));
    return out;
}

RTable r_table(const ParabolicDatum& datum, const Weight& nu)
{
    if (nu.size() != static_cast<std::size_t>(datum.n()))
        throw Error(ErrorKind::LengthMismatch, "weight length differs from n");
    RTable table(datum.r());
    for (std::size_t i = 1; i <= datum.r(); ++i) {
        const auto a = nu.block(datum, i);
        for (std::size_t j = i + 1; j <= datum.r(); ++j) {
            const auto b = nu.block(datum, j);
            // both blocks are strictly decreasing, so a merge walk counts the
            // shared values
            int shared = 0;
            std::size_t x = 0;
            std::size_t y = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x] == b[y]) {
                    ++shared;
                    ++x;
                    ++y;
                } else if (a[x] > b[y]) {
                    ++x;
                } else {
                    ++y;
                }
            }
            table.set(i, j, shared);
        }
    }
    return table;
}

RTable r_table(const ParabolicDatum& datum, const LambdaParam& lambda)
{
    return r_table(datum, nu(datum, lambda));
}

namespace {

void check_adjacent_pair(int blocks, int i)
{
    if (i < 1 || i >= blocks)
        throw Error(ErrorKind::BlockOutOfRange,
                    "adjacent pair " + std::to_string(i) + " needs 1 <= i <= " + std::to_string(blocks - 1));
}

} // namespace

int overlap_by_definition(const PartitionedTableau& t, int i)
{
    check_adjacent_pair(t.block_count(), i);
    const auto k = t.block_size(i);
    const auto l = t.block_size(i + 1);
    int best = 0;
    for (std::size_t m = 1; m <= std::min(k, l); ++m) {
        bool holds = true;
        for (std::size_t u = 1; u <= m && holds; ++u)
            holds = t.block_cell(i, k - m + u).col < t.block_cell(i + 1, u).col;
        if (holds)
            best = static_cast<int>(m);
    }
    return best;
}

int overlap_by_formula(const ParabolicDatum& datum, int i)
{
    check_adjacent_pair(static_cast<int>(datum.r()), i);
    const auto a = static_cast<std::size_t>(i);
    return std::min(datum.p(a), datum.q(a + 1)) + std::min(datum.p(a + 1), datum.q(a));
}

int singularity(const PartitionedTableau& t, int i)
{
    check_adjacent_pair(t.block_count(), i);
    if (!t.has_entries())
        throw Error(ErrorKind::MissingEntries, "singularity needs a tableau with entries");
    int pairs = 0;
    for (std::size_t u = 1; u <= t.block_size(i); ++u) {
        for (std::size_t v = 1; v <= t.block_size(i + 1); ++v)
            pairs += t.block_cell(i, u).entry == t.block_cell(i + 1, v).entry ? 1 : 0;
    }
    return pairs;
}

bool is_antitableau(const PartitionedTableau& t)
{
    if (!t.has_entries())
        throw Error(ErrorKind::MissingEntries, "antitableau test needs entries");
    for (const auto& c : t.cells()) {
        if (const Cell* right = t.at(c.row, c.col + 1); right && !(*c.entry >= *right->entry))
            return false;
        if (const Cell* below = t.at(c.row + 1, c.col); below && !(*c.entry > *below->entry))
            return false;
    }
    return true;
}

} // namespace aqtab
