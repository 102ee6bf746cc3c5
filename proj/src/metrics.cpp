#include "ctaea/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ctaea {

namespace {

double nearest_distance(const std::vector<double>& r,
                        std::span<const std::vector<double>> candidates) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : candidates) {
        double d2 = 0.0;
        for (std::size_t j = 0; j < r.size(); ++j) {
            double t = r[j] - a[j];
            d2 += t * t;
        }
        best = std::min(best, d2);
    }
    return std::sqrt(best);
}

double igd_impl(std::span<const std::vector<double>> points, const ReferenceFront& front) {
    if (front.points.empty())
        throw ContractViolation("igd: empty reference front");
    double total = 0.0;
    for (const auto& r : front.points)
        total += nearest_distance(r, points);
    return total / static_cast<double>(front.points.size());
}

} // namespace

std::optional<double> igd(std::span<const Solution> archive, const ReferenceFront& front) {
    std::vector<std::vector<double>> feasible;
    for (const auto& s : archive)
        if (s.feasible())
            feasible.push_back(s.f);
    if (feasible.empty())
        return std::nullopt;
    return igd_impl(feasible, front);
}

double igd_points(std::span<const std::vector<double>> points, const ReferenceFront& front) {
    if (points.empty())
        throw ContractViolation("igd: empty archive");
    return igd_impl(points, front);
}

SummaryStats summarize(std::span<const double> values) {
    if (values.empty())
        throw ContractViolation("summarize: empty sample");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    SummaryStats stats;
    std::size_t n = sorted.size();
    stats.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    double mean = 0.0;
    for (double v : sorted)
        mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : sorted)
        var += (v - mean) * (v - mean);
    stats.stddev = std::sqrt(var / static_cast<double>(n));
    return stats;
}

namespace {

// Mid-ranks of the pooled sample, then the rank sum of the first one.
std::pair<std::vector<double>, double> pooled_ranks(std::span<const double> xs,
                                                    std::span<const double> ys) {
    struct Tagged {
        double value;
        bool first;
    };
    std::vector<Tagged> pooled;
    pooled.reserve(xs.size() + ys.size());
    for (double v : xs)
        pooled.push_back({v, true});
    for (double v : ys)
        pooled.push_back({v, false});
    std::stable_sort(pooled.begin(), pooled.end(),
                     [](const Tagged& a, const Tagged& b) { return a.value < b.value; });

    std::vector<double> ranks(pooled.size());
    std::size_t i = 0;
    while (i < pooled.size()) {
        std::size_t j = i;
        while (j + 1 < pooled.size() && pooled[j + 1].value == pooled[i].value)
            ++j;
        double mid = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k)
            ranks[k] = mid;
        i = j + 1;
    }
    double statistic = 0.0;
    for (std::size_t k = 0; k < pooled.size(); ++k)
        if (pooled[k].first)
            statistic += ranks[k];
    return {std::move(ranks), statistic};
}

double normal_sf(double z) {
    return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

// Exact permutation p-value: the share of n-subsets of the pooled ranks
// whose sum deviates from the mean at least as much as the observed one.
double exact_two_sided_p(const std::vector<double>& ranks, std::size_t n, double observed) {
    const std::size_t total = ranks.size();
    double mu = static_cast<double>(n) * static_cast<double>(total + 1) / 2.0;
    double threshold = std::abs(observed - mu) - 1e-12;

    std::size_t extreme = 0, count = 0;
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i)
        pick[i] = i;
    while (true) {
        double sum = 0.0;
        for (std::size_t i : pick)
            sum += ranks[i];
        ++count;
        if (std::abs(sum - mu) >= threshold)
            ++extreme;
        // next combination
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (pick[i] != i + total - n) {
                ++pick[i];
                for (std::size_t k = i + 1; k < n; ++k)
                    pick[k] = pick[k - 1] + 1;
                break;
            }
            if (i == 0)
                return static_cast<double>(extreme) / static_cast<double>(count);
        }
    }
}

} // namespace

RankSumResult wilcoxon_rank_sum(std::span<const double> xs, std::span<const double> ys,
                                double alpha) {
    if (xs.size() < 5 || ys.size() < 5)
        throw ContractViolation("wilcoxon_rank_sum: need at least 5 values per sample");

    auto [ranks, statistic] = pooled_ranks(xs, ys);
    RankSumResult result;
    result.statistic = statistic;

    double mx = summarize(xs).median;
    double my = summarize(ys).median;
    result.direction = mx < my ? -1 : (my < mx ? 1 : 0);

    const double n = static_cast<double>(xs.size());
    const double m = static_cast<double>(ys.size());
    const double total = n + m;

    // Tie diagnostics: all values identical means no information at all.
    double tie_term = 0.0;
    bool all_tied = true;
    {
        std::size_t i = 0;
        while (i < ranks.size()) {
            std::size_t j = i;
            while (j + 1 < ranks.size() && ranks[j + 1] == ranks[i])
                ++j;
            double t = static_cast<double>(j - i + 1);
            tie_term += t * t * t - t;
            if (t != total)
                all_tied = false;
            i = j + 1;
        }
    }
    if (all_tied) {
        result.p_value = 1.0;
        result.significant = false;
        return result;
    }

    if (xs.size() < 10 || ys.size() < 10) {
        result.p_value = exact_two_sided_p(ranks, xs.size(), statistic);
    } else {
        double mu = n * (total + 1.0) / 2.0;
        double var = n * m * (total + 1.0) / 12.0 -
                     n * m * tie_term / (12.0 * total * (total - 1.0));
        if (var <= 0.0) {
            result.p_value = 1.0;
            result.significant = false;
            return result;
        }
        double diff = statistic - mu;
        double corrected = diff > 0.5 ? diff - 0.5 : (diff < -0.5 ? diff + 0.5 : 0.0);
        double z = corrected / std::sqrt(var);
        result.p_value = std::min(1.0, 2.0 * normal_sf(std::abs(z)));
    }
    result.significant = result.p_value < alpha;
    return result;
}

} // namespace ctaea
