#include "aqtab/ranges.hpp"

#include <algorithm>

namespace aqtab {

Weight rho(int n)
{
    if (n < 1)
        throw Error(ErrorKind::PreconditionViolated, "rho needs n >= 1");
    std::vector<HalfInt> coords;
    coords.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        coords.push_back(HalfInt::from_doubled(n - 1 - 2 * k));
    return Weight(std::move(coords));
}

Weight nu(const ParabolicDatum& datum, const LambdaParam& lambda)
{
    check_lengths(datum, lambda);
    const int n = datum.n();
    std::vector<HalfInt> coords;
    coords.reserve(static_cast<std::size_t>(n));
    int k = 0;
    for (std::size_t i = 1; i <= datum.r(); ++i) {
        for (int t = 0; t < datum.n(i); ++t, ++k)
            coords.push_back(HalfInt(lambda.value(i)) + HalfInt::from_doubled(n - 1 - 2 * k));
    }
    return Weight(std::move(coords));
}

std::string_view to_string(RangeLabel label)
{
    switch (label) {
    case RangeLabel::Good: return "good";
    case RangeLabel::WeaklyGood: return "weakly_good";
    case RangeLabel::Nice: return "nice";
    case RangeLabel::Fair: return "fair";
    case RangeLabel::WeaklyFair: return "weakly_fair";
    case RangeLabel::Mediocre: return "mediocre";
    case RangeLabel::None: return "none";
    }
    return "none";
}

RangeClass classify(const ParabolicDatum& datum, const Weight& nu)
{
    if (nu.size() != static_cast<std::size_t>(datum.n()))
        throw Error(ErrorKind::LengthMismatch, "weight length differs from n");
    RangeClass rc{RangeLabel::None, true, true, true, true, true, true};
    const std::size_t r = datum.r();
    for (std::size_t i = 1; i <= r; ++i) {
        const auto bi = nu.block(datum, i);
        const HalfInt first_i = bi.front();
        const HalfInt last_i = bi.back();
        for (std::size_t j = i + 1; j <= r; ++j) {
            const auto bj = nu.block(datum, j);
            const HalfInt first_j = bj.front();
            const HalfInt last_j = bj.back();
            rc.weakly_good = rc.weakly_good && last_i >= first_j;
            rc.good = rc.good && last_i > first_j;
            rc.weakly_fair = rc.weakly_fair && first_i + last_i >= first_j + last_j;
            rc.fair = rc.fair && first_i + last_i > first_j + last_j;
            rc.nice = rc.nice && first_i >= first_j && last_i >= last_j;
            rc.mediocre = rc.mediocre && (first_i >= first_j || last_i >= last_j);
        }
    }
    if (rc.good)
        rc.label = RangeLabel::Good;
    else if (rc.weakly_good)
        rc.label = RangeLabel::WeaklyGood;
    else if (rc.nice)
        rc.label = RangeLabel::Nice;
    else if (rc.fair)
        rc.label = RangeLabel::Fair;
    else if (rc.weakly_fair)
        rc.label = RangeLabel::WeaklyFair;
    else if (rc.mediocre)
        rc.label = RangeLabel::Mediocre;
    return rc;
}

RangeClass classify(const ParabolicDatum& datum, const LambdaParam& lambda)
{
    return classify(datum, nu(datum, lambda));
}

bool nice_gap_check(const ParabolicDatum& datum, const LambdaParam& lambda)
{
    check_lengths(datum, lambda);
    for (std::size_t i = 1; i < datum.r(); ++i) {
        if (lambda.gap(i) > std::min(datum.n(i), datum.n(i + 1)))
            return false;
    }
    return true;
}

} // namespace aqtab
