#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ctaea/errors.hpp"

namespace ctaea {

/// Used when a problem declares equality constraints without tolerances.
constexpr double kDefaultEqualityTolerance = 1e-4;

/// Raw evaluator output. Inequalities follow the g >= 0 convention;
/// equalities are satisfied when |h_k| <= delta_k.
struct Evaluation {
    std::vector<double> f;
    std::vector<double> g;
    std::vector<double> h;
};

struct ProblemSpec {
    std::string name;
    std::size_t n = 0;   ///< decision variables
    std::size_t m = 0;   ///< objectives (always minimized)
    std::size_t q = 0;   ///< inequality constraints
    std::size_t ell = 0; ///< equality constraints
    std::vector<double> lower;
    std::vector<double> upper;
    std::vector<double> delta; ///< per-equality tolerance, length ell
    std::function<Evaluation(std::span<const double>)> evaluator;
};

/// Throws ConfigError if the spec breaks its structural invariants
/// (lower < upper, m >= 2, n >= 1, tolerance/evaluator shape).
void validate(const ProblemSpec& problem);

struct Solution {
    std::vector<double> x;
    std::vector<double> f;
    std::vector<double> g;
    std::vector<double> h;
    double cv = 0.0;

    bool feasible() const { return cv == 0.0; }
    bool operator==(const Solution&) const = default;
};

/// Fixed-capacity ordered multiset of solutions. Both update kernels
/// return archives filled exactly to capacity.
struct Archive {
    std::size_t capacity = 0;
    std::vector<Solution> members;

    std::size_t size() const { return members.size(); }
};

/// Scalar violation: sum of max{-g_j, 0} plus max{|h_k| - delta_k, 0}.
/// Zero if and only if the solution is feasible.
double constraint_violation(std::span<const double> g, std::span<const double> h,
                            std::span<const double> delta);

/// Pareto dominance on minimized objective vectors: no worse everywhere and
/// strictly better somewhere. Feasibility is never consulted here.
bool dominates(std::span<const double> a, std::span<const double> b);
bool dominates(const Solution& a, const Solution& b);

/// flags[i] is true iff no other member of s dominates s[i].
std::vector<bool> nondominated_flags(std::span<const Solution> s);
std::vector<bool> nondominated_flags(std::span<const std::vector<double>> objectives);

/// Members of s not dominated by any other member, in stable order.
std::vector<Solution> nondominated_filter(std::span<const Solution> s);

/// Evaluates x and assembles the solution with its constraint violation.
/// Throws ContractViolation when x is outside the box.
Solution evaluate(const ProblemSpec& problem, std::vector<double> x);

} // namespace ctaea
