#pragma once

// Signed tableaux S_±, nu-quasitableaux S, and the q-consistent partition of
// both into skew columns S_1, ..., S_r. One PartitionedTableau carries all
// three: every cell knows its optional sign, optional entry and block label.

#include "aqtab/core.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aqtab {

enum class Sign : std::uint8_t { Plus, Minus };

constexpr Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

struct Cell {
    int row = 0; // 1-based
    int col = 0; // 1-based
    std::optional<Sign> sign;
    std::optional<HalfInt> entry;
    int block = 0; // 1..r

    friend bool operator==(const Cell&, const Cell&) = default;
};

enum class TableauKind { SignedOnly, EntriesOnly, Both };

class PartitionedTableau {
public:
    PartitionedTableau() = default;

    // rows[k] lists row k+1 from left to right. The row/col fields of the
    // given cells are ignored and reassigned from their position.
    PartitionedTableau(const std::vector<std::vector<Cell>>& rows, int blocks, TableauKind kind);

    std::size_t row_count() const noexcept { return row_offsets_.empty() ? 0 : row_offsets_.size() - 1; }
    std::size_t size() const noexcept { return cells_.size(); }
    int block_count() const noexcept { return blocks_; }
    TableauKind kind() const noexcept { return kind_; }
    bool has_signs() const noexcept { return kind_ != TableauKind::EntriesOnly; }
    bool has_entries() const noexcept { return kind_ != TableauKind::SignedOnly; }

    // All cells in row-major order.
    std::span<const Cell> cells() const noexcept { return cells_; }
    // Row `row` (1-based), left to right.
    std::span<const Cell> row(std::size_t row) const;
    int row_length(std::size_t row) const;
    std::vector<int> shape() const;
    // Cell at (row, col), both 1-based, or nullptr outside the diagram.
    const Cell* at(int row, int col) const;

    // Cells of skew column S_j, top to bottom ([1]^{(j)}, [2]^{(j)}, ...).
    std::vector<Cell> block_cells(int j) const;
    std::size_t block_size(int j) const;
    // The t-th cell (1-based) of block j counting from the top.
    const Cell& block_cell(int j, std::size_t t) const;

    std::string sign_string(std::size_t row) const; // "-+-"
    std::vector<std::string> sign_rows() const;

    // First violated structural invariant (Young shape, sign alternation,
    // skew-column partition, difference-one blocks), or nullopt.
    std::optional<std::string> structure_violation() const;

    // Same diagram with entries replaced; `entries` is row-major.
    PartitionedTableau with_entries(std::span<const HalfInt> entries) const;
    // Fills entries in place from a list in block order: block 1 top to
    // bottom, then block 2, and so on. This is the coordinate order of nu.
    void set_block_entries(std::span<const HalfInt> by_block);
    // Same diagram with entries dropped.
    PartitionedTableau signs_only() const;

    std::vector<std::vector<Cell>> to_rows() const;

    friend bool operator==(const PartitionedTableau& a, const PartitionedTableau& b)
    {
        return a.blocks_ == b.blocks_ && a.kind_ == b.kind_ && a.cells_ == b.cells_ &&
               a.row_offsets_ == b.row_offsets_;
    }

private:
    void check_block(int j) const;

    std::vector<Cell> cells_;
    std::vector<std::size_t> row_offsets_;
    // cell indices grouped by block, each group top to bottom
    std::vector<std::size_t> block_index_;
    std::vector<std::size_t> block_offsets_;
    int blocks_ = 0;
    TableauKind kind_ = TableauKind::SignedOnly;
};

enum class SignOrder { PlusFirst, MinusFirst };

struct ConstructionOptions {
    // Row order of the first column.
    SignOrder first_column = SignOrder::PlusFirst;
    // Order of the new one-box rows opened for leftover signs.
    SignOrder leftover = SignOrder::PlusFirst;
};

// Step-by-step construction of the signed tableau attached to q. Each step
// appends at most one sign to each row end, top to bottom, alternating with
// the row's last sign and skipping rows whose demanded sign is exhausted;
// leftovers open new rows, then rows are stably sorted by length. Every cell
// is labelled with the step that placed it.
PartitionedTableau build_signed_tableau(const ParabolicDatum& datum,
                                        const ConstructionOptions& options = {});

// nu-quasitableau with the q-consistent partition: block j's cells, read top
// to bottom, receive nu^{(j)}_1, ..., nu^{(j)}_{n_j}.
PartitionedTableau build_quasitableau(const ParabolicDatum& datum, const LambdaParam& lambda);
PartitionedTableau fill_entries(const PartitionedTableau& skeleton, const ParabolicDatum& datum,
                                const Weight& nu);

// Rows sorted by (length desc, sign string with + < -, entries, block labels).
// Equal-length rows are interchangeable in a signed tableau, so two
// representatives have equal sign rows here iff they are the same signed
// tableau. The row order is a convention of this library.
PartitionedTableau canonicalize(const PartitionedTableau& t);

// Rows of S^{j-1} lying above the last row touched by block j that receive no
// cell of block j: the rows skipped in the arrangement of S_j. 1-based.
std::vector<int> skipped_rows(const PartitionedTableau& t, int j);

struct QConsistency {
    bool consistent = true;
    // 0 = not a partition into skew columns, 1 = sign counts, 2 = skip rule
    int violated_property = 0;
    int block = 0;
    std::string detail;
};

QConsistency check_q_consistent(const PartitionedTableau& t, const ParabolicDatum& datum);

} // namespace aqtab
