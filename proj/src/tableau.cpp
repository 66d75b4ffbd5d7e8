#include "aqtab/tableau.hpp"

#include "aqtab/ranges.hpp"

#include <algorithm>
#include <sstream>

namespace aqtab {

PartitionedTableau::PartitionedTableau(const std::vector<std::vector<Cell>>& rows, int blocks,
                                       TableauKind kind)
    : blocks_(blocks)
    , kind_(kind)
{
    std::size_t total = 0;
    for (const auto& r : rows)
        total += r.size();
    cells_.reserve(total);
    row_offsets_.reserve(rows.size() + 1);
    row_offsets_.push_back(0);
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        for (std::size_t ci = 0; ci < rows[ri].size(); ++ci) {
            Cell c = rows[ri][ci];
            c.row = static_cast<int>(ri + 1);
            c.col = static_cast<int>(ci + 1);
            cells_.push_back(c);
        }
        row_offsets_.push_back(cells_.size());
    }

    // Counting sort of cell indices by block; row-major order keeps each
    // group top to bottom.
    block_offsets_.assign(static_cast<std::size_t>(std::max(blocks_, 0)) + 2, 0);
    for (const auto& c : cells_) {
        const auto b = static_cast<std::size_t>(std::clamp(c.block, 0, blocks_ + 1));
        if (b >= 1 && b <= static_cast<std::size_t>(blocks_))
            ++block_offsets_[b];
    }
    for (std::size_t b = 1; b < block_offsets_.size(); ++b)
        block_offsets_[b] += block_offsets_[b - 1];
    block_index_.assign(block_offsets_.back(), 0);
    std::vector<std::size_t> fill(block_offsets_.begin(), block_offsets_.end() - 1);
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        const int b = cells_[k].block;
        if (b >= 1 && b <= blocks_)
            block_index_[fill[static_cast<std::size_t>(b) - 1]++] = k;
    }
}

std::span<const Cell> PartitionedTableau::row(std::size_t row) const
{
    if (row < 1 || row > row_count())
        throw Error(ErrorKind::BlockOutOfRange, "row " + std::to_string(row));
    return std::span<const Cell>(cells_).subspan(row_offsets_[row - 1],
                                                 row_offsets_[row] - row_offsets_[row - 1]);
}

int PartitionedTableau::row_length(std::size_t row) const
{
    return static_cast<int>(this->row(row).size());
}

std::vector<int> PartitionedTableau::shape() const
{
    std::vector<int> s;
    s.reserve(row_count());
    for (std::size_t k = 1; k <= row_count(); ++k)
        s.push_back(row_length(k));
    return s;
}

const Cell* PartitionedTableau::at(int row, int col) const
{
    if (row < 1 || static_cast<std::size_t>(row) > row_count() || col < 1)
        return nullptr;
    const auto begin = row_offsets_[static_cast<std::size_t>(row) - 1];
    const auto end = row_offsets_[static_cast<std::size_t>(row)];
    if (begin + static_cast<std::size_t>(col) > end)
        return nullptr;
    return &cells_[begin + static_cast<std::size_t>(col) - 1];
}

void PartitionedTableau::check_block(int j) const
{
    if (j < 1 || j > blocks_)
        throw Error(ErrorKind::BlockOutOfRange,
                    "block " + std::to_string(j) + " not in 1.." + std::to_string(blocks_));
}

std::size_t PartitionedTableau::block_size(int j) const
{
    check_block(j);
    const auto b = static_cast<std::size_t>(j);
    return block_offsets_[b] - block_offsets_[b - 1];
}

const Cell& PartitionedTableau::block_cell(int j, std::size_t t) const
{
    const auto len = block_size(j);
    if (t < 1 || t > len)
        throw Error(ErrorKind::BlockOutOfRange,
                    "cell " + std::to_string(t) + " of block " + std::to_string(j));
    return cells_[block_index_[block_offsets_[static_cast<std::size_t>(j) - 1] + t - 1]];
}

std::vector<Cell> PartitionedTableau::block_cells(int j) const
{
    const auto len = block_size(j);
    std::vector<Cell> out;
    out.reserve(len);
    for (std::size_t t = 1; t <= len; ++t)
        out.push_back(block_cell(j, t));
    return out;
}

std::string PartitionedTableau::sign_string(std::size_t row) const
{
    std::string s;
    for (const auto& c : this->row(row))
        s.push_back(c.sign ? to_char(*c.sign) : '.');
    return s;
}

std::vector<std::string> PartitionedTableau::sign_rows() const
{
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= row_count(); ++k)
        out.push_back(sign_string(k));
    return out;
}

std::optional<std::string> PartitionedTableau::structure_violation() const
{
    if (cells_.empty())
        return "empty tableau";
    for (std::size_t k = 1; k <= row_count(); ++k) {
        if (row_length(k) == 0)
            return "row " + std::to_string(k) + " is empty";
        if (k > 1 && row_length(k) > row_length(k - 1))
            return "row " + std::to_string(k) + " is longer than the row above";
    }
    for (const auto& c : cells_) {
        const auto where = "cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
        if (c.block < 1 || c.block > blocks_)
            return where + " has block " + std::to_string(c.block);
        if (has_signs() && !c.sign)
            return where + " has no sign";
        if (has_entries() && !c.entry)
            return where + " has no entry";
    }
    for (std::size_t k = 1; k <= row_count(); ++k) {
        const auto cells = row(k);
        for (std::size_t t = 1; t < cells.size(); ++t) {
            if (has_signs() && cells[t].sign == cells[t - 1].sign)
                return "signs do not alternate in row " + std::to_string(k);
            // at most one box of each block per row, and each S^j left-justified
            if (cells[t].block <= cells[t - 1].block)
                return "block labels not increasing along row " + std::to_string(k);
        }
    }
    for (int j = 1; j <= blocks_; ++j) {
        if (block_size(j) == 0)
            return "block " + std::to_string(j) + " is empty";
        int previous = -1;
        for (std::size_t k = 1; k <= row_count(); ++k) {
            int len = 0;
            for (const auto& c : row(k))
                len += c.block <= j ? 1 : 0;
            if (previous >= 0 && len > previous)
                return "S^" + std::to_string(j) + " is not a Young diagram at row " + std::to_string(k);
            previous = len;
        }
        if (has_entries()) {
            for (std::size_t t = 2; t <= block_size(j); ++t) {
                if (*block_cell(j, t - 1).entry - *block_cell(j, t).entry != HalfInt(1))
                    return "block " + std::to_string(j) + " is not difference-one";
            }
        }
    }
    return std::nullopt;
}

PartitionedTableau PartitionedTableau::with_entries(std::span<const HalfInt> entries) const
{
    if (entries.size() != cells_.size())
        throw Error(ErrorKind::LengthMismatch, "entry count does not match the diagram");
    PartitionedTableau out = *this;
    for (std::size_t k = 0; k < cells_.size(); ++k)
        out.cells_[k].entry = entries[k];
    out.kind_ = kind_ == TableauKind::SignedOnly ? TableauKind::Both : kind_;
    return out;
}

void PartitionedTableau::set_block_entries(std::span<const HalfInt> by_block)
{
    if (by_block.size() != cells_.size() || block_index_.size() != cells_.size())
        throw Error(ErrorKind::LengthMismatch, "entry count does not match the diagram");
    for (std::size_t k = 0; k < block_index_.size(); ++k)
        cells_[block_index_[k]].entry = by_block[k];
    if (kind_ == TableauKind::SignedOnly)
        kind_ = TableauKind::Both;
}

PartitionedTableau PartitionedTableau::signs_only() const
{
    PartitionedTableau out = *this;
    for (auto& c : out.cells_)
        c.entry.reset();
    out.kind_ = TableauKind::SignedOnly;
    return out;
}

std::vector<std::vector<Cell>> PartitionedTableau::to_rows() const
{
    std::vector<std::vector<Cell>> rows;
    rows.reserve(row_count());
    for (std::size_t k = 1; k <= row_count(); ++k) {
        const auto r = row(k);
        rows.emplace_back(r.begin(), r.end());
    }
    return rows;
}

namespace {

void open_rows(std::vector<std::vector<Cell>>& rows, int plus, int minus, int block, SignOrder order)
{
    auto push = [&](Sign s, int count) {
        for (int k = 0; k < count; ++k)
            rows.push_back({Cell{0, 0, s, std::nullopt, block}});
    };
    if (order == SignOrder::PlusFirst) {
        push(Sign::Plus, plus);
        push(Sign::Minus, minus);
    } else {
        push(Sign::Minus, minus);
        push(Sign::Plus, plus);
    }
}

} // namespace

PartitionedTableau build_signed_tableau(const ParabolicDatum& datum, const ConstructionOptions& options)
{
    std::vector<std::vector<Cell>> rows;
    open_rows(rows, datum.p(1), datum.q(1), 1, options.first_column);

    for (std::size_t j = 2; j <= datum.r(); ++j) {
        int remaining[2] = {datum.p(j), datum.q(j)};
        for (auto& row : rows) {
            if (remaining[0] == 0 && remaining[1] == 0)
                break;
            const Sign want = opposite(*row.back().sign);
            int& left = remaining[want == Sign::Plus ? 0 : 1];
            if (left == 0)
                continue; // skipped row
            row.push_back(Cell{0, 0, want, std::nullopt, static_cast<int>(j)});
            --left;
        }
        open_rows(rows, remaining[0], remaining[1], static_cast<int>(j), options.leftover);
        std::stable_sort(rows.begin(), rows.end(),
                         [](const auto& a, const auto& b) { return a.size() > b.size(); });
    }
    return PartitionedTableau(rows, static_cast<int>(datum.r()), TableauKind::SignedOnly);
}

PartitionedTableau fill_entries(const PartitionedTableau& skeleton, const ParabolicDatum& datum,
                                const Weight& nu)
{
    if (static_cast<std::size_t>(skeleton.block_count()) != datum.r() ||
        skeleton.size() != static_cast<std::size_t>(datum.n()) || nu.size() != skeleton.size())
        throw Error(ErrorKind::LengthMismatch, "skeleton, datum and weight disagree in size");
    for (int j = 1; j <= skeleton.block_count(); ++j) {
        if (skeleton.block_size(j) != static_cast<std::size_t>(datum.n(static_cast<std::size_t>(j))))
            throw Error(ErrorKind::LengthMismatch, "block " + std::to_string(j) + " size mismatch");
    }
    PartitionedTableau out = skeleton;
    out.set_block_entries(nu.coords());
    return out;
}

PartitionedTableau build_quasitableau(const ParabolicDatum& datum, const LambdaParam& lambda)
{
    check_lengths(datum, lambda);
    return fill_entries(build_signed_tableau(datum), datum, nu(datum, lambda));
}

PartitionedTableau canonicalize(const PartitionedTableau& t)
{
    auto rows = t.to_rows();
    auto key_less = [](const std::vector<Cell>& a, const std::vector<Cell>& b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        auto sign_rank = [](const Cell& c) { return c.sign ? static_cast<int>(*c.sign) : -1; };
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (sign_rank(a[k]) != sign_rank(b[k]))
                return sign_rank(a[k]) < sign_rank(b[k]);
        }
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k].entry != b[k].entry)
                return a[k].entry < b[k].entry;
        }
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k].block != b[k].block)
                return a[k].block < b[k].block;
        }
        return false;
    };
    std::stable_sort(rows.begin(), rows.end(), key_less);
    return PartitionedTableau(rows, t.block_count(), t.kind());
}

std::vector<int> skipped_rows(const PartitionedTableau& t, int j)
{
    t.block_size(j);
    std::vector<int> out;
    if (j == 1)
        return out;
    int last = 0;
    for (std::size_t k = 1; k <= t.row_count(); ++k) {
        for (const auto& c : t.row(k))
            if (c.block == j)
                last = static_cast<int>(k);
    }
    for (int k = 1; k < last; ++k) {
        bool in_previous = false;
        bool has_j = false;
        for (const auto& c : t.row(static_cast<std::size_t>(k))) {
            in_previous = in_previous || c.block < j;
            has_j = has_j || c.block == j;
        }
        if (in_previous && !has_j)
            out.push_back(k);
    }
    return out;
}

QConsistency check_q_consistent(const PartitionedTableau& t, const ParabolicDatum& datum)
{
    auto fail = [](int property, int block, std::string detail) {
        return QConsistency{false, property, block, std::move(detail)};
    };
    if (!t.has_signs())
        return fail(0, 0, "tableau carries no signs");
    if (static_cast<std::size_t>(t.block_count()) != datum.r())
        return fail(0, 0, "tableau has " + std::to_string(t.block_count()) + " blocks, datum has " +
                              std::to_string(datum.r()));
    if (auto v = t.structure_violation())
        return fail(0, 0, *v);

    for (int j = 1; j <= t.block_count(); ++j) {
        int plus = 0;
        int minus = 0;
        for (const auto& c : t.block_cells(j))
            (*c.sign == Sign::Plus ? plus : minus) += 1;
        const auto bj = static_cast<std::size_t>(j);
        if (plus != datum.p(bj) || minus != datum.q(bj)) {
            std::ostringstream os;
            os << "block " << j << " has " << plus << " pluses and " << minus << " minuses, expected "
               << datum.p(bj) << " and " << datum.q(bj);
            return fail(1, j, os.str());
        }
    }

    for (int j = 2; j <= t.block_count(); ++j) {
        const auto skipped = skipped_rows(t, j);
        if (skipped.empty())
            continue;
        int last = 0;
        for (const auto& c : t.block_cells(j))
            last = std::max(last, c.row);
        std::optional<Sign> common;
        for (int k = skipped.front(); k <= last; ++k) {
            std::optional<Sign> end;
            for (const auto& c : t.row(static_cast<std::size_t>(k)))
                if (c.block <= j)
                    end = c.sign;
            if (common && end != common)
                return fail(2, j,
                            "rows " + std::to_string(skipped.front()) + ".." + std::to_string(last) +
                                " of S^" + std::to_string(j) + " do not end with the same sign");
            common = end;
        }
    }
    return {};
}

} // namespace aqtab
