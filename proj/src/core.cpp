#include "ctaea/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace ctaea {

void validate(const ProblemSpec& problem) {
    if (problem.m < 2 || problem.n < 1)
        throw ConfigError("problem '" + problem.name + "': need m >= 2 and n >= 1");
    if (problem.lower.size() != problem.n || problem.upper.size() != problem.n)
        throw ConfigError("problem '" + problem.name + "': bounds length != n");
    for (std::size_t i = 0; i < problem.n; ++i)
        if (!(problem.lower[i] < problem.upper[i]))
            throw ConfigError("problem '" + problem.name + "': empty box on variable " +
                              std::to_string(i));
    if (problem.delta.size() != problem.ell)
        throw ConfigError("problem '" + problem.name + "': tolerance length != ell");
    for (double d : problem.delta)
        if (d < 0.0)
            throw ConfigError("problem '" + problem.name + "': negative equality tolerance");
    if (!problem.evaluator)
        throw ConfigError("problem '" + problem.name + "': missing evaluator");
}

double constraint_violation(std::span<const double> g, std::span<const double> h,
                            std::span<const double> delta) {
    if (h.size() != delta.size())
        throw ContractViolation("constraint_violation: |h| != |delta|");
    double cv = 0.0;
    for (double gj : g)
        cv += std::max(-gj, 0.0);
    for (std::size_t k = 0; k < h.size(); ++k)
        cv += std::max(std::abs(h[k]) - delta[k], 0.0);
    return cv;
}

bool dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw ContractViolation("dominates: objective dimension mismatch");
    bool strictly_better = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > b[j])
            return false;
        if (a[j] < b[j])
            strictly_better = true;
    }
    return strictly_better;
}

bool dominates(const Solution& a, const Solution& b) {
    return dominates(std::span<const double>(a.f), std::span<const double>(b.f));
}

namespace {

template <typename GetF>
std::vector<bool> flags_impl(std::size_t count, GetF objectives_of) {
    std::vector<bool> flags(count, true);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (i == j)
                continue;
            if (dominates(objectives_of(j), objectives_of(i))) {
                flags[i] = false;
                break;
            }
        }
    }
    return flags;
}

} // namespace

std::vector<bool> nondominated_flags(std::span<const Solution> s) {
    return flags_impl(s.size(), [&](std::size_t i) {
        return std::span<const double>(s[i].f);
    });
}

std::vector<bool> nondominated_flags(std::span<const std::vector<double>> objectives) {
    return flags_impl(objectives.size(), [&](std::size_t i) {
        return std::span<const double>(objectives[i]);
    });
}

std::vector<Solution> nondominated_filter(std::span<const Solution> s) {
    auto flags = nondominated_flags(s);
    std::vector<Solution> kept;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (flags[i])
            kept.push_back(s[i]);
    return kept;
}

Solution evaluate(const ProblemSpec& problem, std::vector<double> x) {
    if (x.size() != problem.n)
        throw ContractViolation("evaluate: decision vector length != n");
    for (std::size_t i = 0; i < problem.n; ++i)
        if (x[i] < problem.lower[i] || x[i] > problem.upper[i])
            throw ContractViolation("evaluate: variable " + std::to_string(i) +
                                    " outside its bounds");
    Evaluation eval = problem.evaluator(x);
    Solution s;
    s.cv = constraint_violation(eval.g, eval.h, problem.delta);
    s.x = std::move(x);
    s.f = std::move(eval.f);
    s.g = std::move(eval.g);
    s.h = std::move(eval.h);
    return s;
}

} // namespace ctaea
