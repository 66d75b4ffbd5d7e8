#pragma once

#include "aqtab/core.hpp"
#include "aqtab/tableau.hpp"

#include <vector>

namespace aqtab {

// R_{ij} = #({nu^{(i)}_1..nu^{(i)}_{n_i}} ∩ {nu^{(j)}_1..nu^{(j)}_{n_j}}).
class RTable {
public:
    explicit RTable(std::size_t r = 0) : r_(r), values_(r * r, 0) {}

    std::size_t r() const noexcept { return r_; }
    // R_{i,i+1}, 1 <= i <= r-1
    int adjacent(std::size_t i) const { return general(i, i + 1); }
    // R_{ij} for i != j (symmetric), 1-based
    int general(std::size_t i, std::size_t j) const
    {
        if (i < 1 || j < 1 || i > r_ || j > r_ || i == j)
            out_of_range(i, j);
        return values_[(i - 1) * r_ + (j - 1)];
    }
    std::vector<int> adjacent_values() const;

    void set(std::size_t i, std::size_t j, int value);

    friend bool operator==(const RTable&, const RTable&) = default;

private:
    [[noreturn]] void out_of_range(std::size_t i, std::size_t j) const;
    std::size_t r_;
    std::vector<int> values_;
};

RTable r_table(const ParabolicDatum& datum, const LambdaParam& lambda);
RTable r_table(const ParabolicDatum& datum, const Weight& nu);

// Largest m <= min{|S_i|, |S_{i+1}|} such that the last m cells of S_i lie
// strictly left of the first m cells of S_{i+1}, pairwise in order; 0 if none.
// Valid for any partition into skew columns.
int overlap_by_definition(const PartitionedTableau& t, int i);

// min{p_i, q_{i+1}} + min{p_{i+1}, q_i}. Only meaningful for the q-consistent
// partition.
int overlap_by_formula(const ParabolicDatum& datum, int i);

// Number of equal-entry pairs between S_i and S_{i+1}.
int singularity(const PartitionedTableau& t, int i);

// Entries weakly decrease along rows and strictly decrease down columns.
bool is_antitableau(const PartitionedTableau& t);

} // namespace aqtab
