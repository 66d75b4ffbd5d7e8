#pragma once

#include "aqtab/core.hpp"

#include <string_view>

namespace aqtab {

// ((n-1)/2, (n-3)/2, ..., -(n-1)/2)
Weight rho(int n);

// lambda expanded blockwise plus rho(n).
Weight nu(const ParabolicDatum& datum, const LambdaParam& lambda);

enum class RangeLabel { Good, WeaklyGood, Nice, Fair, WeaklyFair, Mediocre, None };

std::string_view to_string(RangeLabel label);

// Positivity of lambda for q. Fair and nice are incomparable strengthenings of
// weakly fair, so every flag is reported; `label` is the first satisfied entry
// of Good, WeaklyGood, Nice, Fair, WeaklyFair, Mediocre.
struct RangeClass {
    RangeLabel label = RangeLabel::None;
    bool good = false;
    bool weakly_good = false;
    bool nice = false;
    bool fair = false;
    bool weakly_fair = false;
    bool mediocre = false;

    friend bool operator==(const RangeClass&, const RangeClass&) = default;
};

// Pairwise endpoint and endpoint-sum comparisons between blocks i < j of nu.
RangeClass classify(const ParabolicDatum& datum, const LambdaParam& lambda);
RangeClass classify(const ParabolicDatum& datum, const Weight& nu);

// lambda_{i+1} - lambda_i <= min{n_i, n_{i+1}} for every adjacent pair.
bool nice_gap_check(const ParabolicDatum& datum, const LambdaParam& lambda);

} // namespace aqtab
