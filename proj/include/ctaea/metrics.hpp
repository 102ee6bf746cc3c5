#pragma once

#include <optional>
#include <span>

#include "ctaea/core.hpp"
#include "ctaea/problems.hpp"

namespace ctaea {

/// Inverted generational distance: mean Euclidean distance from each
/// reference point to its nearest feasible archive member. Infeasible
/// members are ignored; an archive without any feasible member yields
/// nullopt ("undefined") rather than a number.
std::optional<double> igd(std::span<const Solution> archive, const ReferenceFront& front);

/// IGD on raw objective vectors, no feasibility filter.
double igd_points(std::span<const std::vector<double>> points, const ReferenceFront& front);

struct MetricSample {
    std::string problem;
    std::string algorithm;
    std::vector<double> values;
};

struct SummaryStats {
    double median = 0;
    double stddev = 0; ///< population standard deviation
};

SummaryStats summarize(std::span<const double> values);

struct RankSumResult {
    double statistic = 0; ///< rank sum of the first sample, mid-rank ties
    double p_value = 1;
    bool significant = false;
    int direction = 0; ///< -1: first median lower, +1: second lower, 0: equal
};

/// Two-sided Wilcoxon rank-sum test with mid-rank tie handling. Exact
/// enumeration when either sample has fewer than 10 values, otherwise the
/// normal approximation with continuity and tie corrections. Identical
/// pooled values short-circuit to p = 1.
RankSumResult wilcoxon_rank_sum(std::span<const double> xs, std::span<const double> ys,
                                double alpha = 0.05);

} // namespace ctaea
