#pragma once

#include <span>
#include <utility>

#include "ctaea/core.hpp"
#include "ctaea/decomposition.hpp"

namespace ctaea {

enum class CaBranch { underfull, exact, overfull };

const char* to_string(CaBranch branch);

/// Diagnostic record of one convergence-archive update.
struct CaUpdateTrace {
    CaBranch branch = CaBranch::underfull;
    /// (subregion, index into the ca-then-offspring pool) admitted by the
    /// trimming loop, in admission order. Empty unless the overfull branch
    /// had to trim.
    std::vector<std::pair<std::size_t, std::size_t>> fills;
};

/// Convergence-archive update. Pools ca with the offspring, then:
///  - fewer feasible than capacity: keep all feasible, fill with the
///    smallest-violation infeasible solutions;
///  - exactly capacity feasible: keep them;
///  - more: per subregion keep the Tchebycheff minimizer, then repeatedly
///    admit the remaining solution whose fitness is closest to its
///    subregion's kept minimizer.
/// Ties everywhere break toward the lowest index / earliest insertion.
Archive update_ca(const Archive& ca, std::span<const Solution> offspring,
                  const WeightVectorSet& w, const IdealPoint& z,
                  CaUpdateTrace* trace = nullptr);

/// Diversity-archive update: pool da with the offspring and repeatedly drop
/// the worst Tchebycheff member of the most crowded subregion until the
/// capacity is reached. Feasibility is never consulted. The most crowded
/// subregion ties toward the lowest index; worst-fitness ties remove the
/// latest inserted member so earlier insertions survive.
Archive update_da(const Archive& da, std::span<const Solution> offspring,
                  const WeightVectorSet& w, const IdealPoint& z);

} // namespace ctaea
