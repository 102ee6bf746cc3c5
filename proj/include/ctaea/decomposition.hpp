#pragma once

#include <span>
#include <vector>

#include "ctaea/core.hpp"

namespace ctaea {

/// Evenly distributed unit-simplex weight vectors; one subregion each.
struct WeightVectorSet {
    std::size_t m = 0;
    std::vector<std::vector<double>> vectors;

    std::size_t size() const { return vectors.size(); }
};

/// Das-Dennis simplex lattice: every (k_1/h, ..., k_m/h) with nonnegative
/// integers summing to h, enumerated with the first component ascending.
/// Count is C(h+m-1, m-1).
WeightVectorSet das_dennis_weights(std::size_t m, unsigned h);

/// Two-layer lattice: the outer layer plus an inner layer shrunk halfway
/// toward the simplex centroid. Used for m > 5 where a single layer is
/// either too coarse or too large.
WeightVectorSet das_dennis_weights(std::size_t m, unsigned h_outer, unsigned h_inner);

/// Conventional set for an objective count: m=2 -> 100 vectors, m=3 -> 105,
/// m=5 -> 210, m=8/10 -> two layers (3,2), m=15 -> (2,1).
WeightVectorSet default_weights(std::size_t m);

/// A set whose size equals the requested archive capacity; ConfigError when
/// no supported lattice parameter yields that count.
WeightVectorSet weights_for_capacity(std::size_t m, std::size_t capacity);

/// Running componentwise minimum of every objective vector seen so far.
struct IdealPoint {
    std::vector<double> z;
};

/// Ideal point that no observation has tightened yet (+inf everywhere).
IdealPoint ideal_point(std::size_t m);

IdealPoint update_ideal(IdealPoint z, std::span<const double> f);

/// Floor applied to zero weight components so boundary vectors stay usable.
constexpr double kTchebycheffWeightFloor = 1e-6;

/// max_j |f_j - z_j| / max(w_j, floor); zero exactly when f == z.
double tchebycheff(std::span<const double> f, std::span<const double> w,
                   const IdealPoint& z);

struct Association {
    std::vector<std::size_t> subregion_of;            ///< per input solution
    std::vector<std::vector<std::size_t>> members_of; ///< per subregion, ascending input index
};

/// Assigns each solution to the weight vector with the smallest acute angle
/// to its translated objective vector f - z. Ties go to the lowest subregion
/// index; a zero translated vector goes to subregion 0.
Association associate(std::span<const Solution> solutions, const WeightVectorSet& w,
                      const IdealPoint& z);

} // namespace ctaea
