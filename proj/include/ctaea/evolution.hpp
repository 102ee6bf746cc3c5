#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ctaea/archives.hpp"
#include "ctaea/rng.hpp"

namespace ctaea {

enum class MatingPool { ca, da };

const char* to_string(MatingPool pool);

/// Adaptive mating state carried across generations.
struct MatingState {
    Archive last_ca;  ///< CA as it stood one update earlier (S^t)
    int choice = 1;   ///< 1 -> CA is the active pool, 2 -> DA
    int utility = 1;  ///< 1 -> CA progressing, 0 -> stagnant
};

struct VariationParams {
    double p_crossover = 1.0;
    double eta_c = 30.0;
    double p_mutation = 0.1; ///< per-variable; runs default this to 1/n
    double eta_m = 20.0;

    bool operator==(const VariationParams&) const = default;
};

/// Last-computed nondominated proportions, exposed for run tracing.
struct StagnationReport {
    double rho_c = 0;
    double rho_lc = 0;
    int utility = 1;
};

/// Pools ca with the previous snapshot, computes the proportion of
/// nondominated members on each side and flags stagnation (utility 0) when
/// the snapshot's proportion is strictly higher. Dominance only; constraint
/// violations play no part here.
StagnationReport assess_stagnation(const Archive& ca, const MatingState& state);

/// Pool-choice transition table. The pool follows the persistent choice
/// marker (1 -> CA, 2 -> DA); a stagnation flag (utility 0) toggles it. A
/// pool stays active while the convergence archive keeps progressing under
/// it. Returns the pool and the new choice marker.
std::pair<MatingPool, int> choose_pool(int utility, int choice);

/// Two independent binary tournaments over distinct uniformly drawn members.
/// On a convergence-style pool (feasibility_first) the lower constraint
/// violation wins and ties fall to a coin; the diversity archive is
/// feasibility-blind, so tournaments on it reduce to uniform picks. Returns
/// member indices; the two parents may coincide.
std::pair<std::size_t, std::size_t> tournament_select(const Archive& pool,
                                                      bool feasibility_first, Rng& rng);

/// Restricted mating rule of the original two-archive algorithm: each parent
/// independently contests one candidate from each archive, the Pareto
/// dominant candidate wins and a coin decides incomparable pairs. When one
/// archive sits on a front that dominates the other pointwise it takes over
/// reproduction.
std::pair<Solution, Solution> ctaea_baseline_mating(const Archive& ca, const Archive& da,
                                                    Rng& rng);

/// Per-variable SBX kernel: both children of (p1, p2) under the uniform
/// draw u, clipped into [lower, upper]. A draw of exactly 0.5 gives a unit
/// spread factor and reproduces the parents.
std::pair<double, double> sbx_children(double p1, double p2, double u, double eta_c,
                                       double lower, double upper);

/// Simulated binary crossover: one spread factor per variable, derived from
/// a uniform draw and eta_c; children are clipped into the box.
std::pair<std::vector<double>, std::vector<double>>
sbx_crossover(std::span<const double> p1, std::span<const double> p2,
              const VariationParams& params, std::span<const double> lower,
              std::span<const double> upper, Rng& rng);

/// Per-variable bounded polynomial step under the uniform draw u. The
/// perturbation vanishes at the box faces.
double mutate_variable(double y, double u, double eta_m, double lower, double upper);

/// Bounded polynomial mutation: each variable is perturbed with probability
/// p_mutation; the perturbation shrinks to zero at the box faces, so results
/// stay within bounds.
std::vector<double> polynomial_mutation(std::span<const double> x,
                                        const VariationParams& params,
                                        std::span<const double> lower,
                                        std::span<const double> upper, Rng& rng);

} // namespace ctaea
