#include "ctaea/evolution.hpp"

#include <algorithm>
#include <cmath>

namespace ctaea {

const char* to_string(MatingPool pool) {
    return pool == MatingPool::ca ? "ca" : "da";
}

StagnationReport assess_stagnation(const Archive& ca, const MatingState& state) {
    if (ca.members.empty() || state.last_ca.members.empty())
        throw ContractViolation("assess_stagnation: empty archive or snapshot");

    std::vector<Solution> pooled;
    pooled.reserve(ca.size() + state.last_ca.size());
    pooled.insert(pooled.end(), ca.members.begin(), ca.members.end());
    pooled.insert(pooled.end(), state.last_ca.members.begin(), state.last_ca.members.end());

    auto flags = nondominated_flags(pooled);
    std::size_t ca_kept = 0, last_kept = 0;
    for (std::size_t i = 0; i < ca.size(); ++i)
        ca_kept += flags[i] ? 1 : 0;
    for (std::size_t i = ca.size(); i < pooled.size(); ++i)
        last_kept += flags[i] ? 1 : 0;

    StagnationReport report;
    report.rho_c = static_cast<double>(ca_kept) / static_cast<double>(ca.size());
    report.rho_lc = static_cast<double>(last_kept) / static_cast<double>(state.last_ca.size());
    report.utility = report.rho_lc > report.rho_c ? 0 : 1;
    return report;
}

std::pair<MatingPool, int> choose_pool(int utility, int choice) {
    // The pool follows the persistent choice marker; stagnation (utility 0)
    // toggles it. A pool that keeps the archive progressing keeps breeding.
    int next = utility == 0 ? (choice == 1 ? 2 : 1) : choice;
    return {next == 2 ? MatingPool::da : MatingPool::ca, next};
}

namespace {

std::size_t binary_tournament(const Archive& pool, bool feasibility_first, Rng& rng) {
    const auto& members = pool.members;
    std::size_t i = rng.uniform_index(members.size());
    std::size_t j = rng.uniform_index(members.size() - 1);
    if (j >= i)
        ++j;
    if (feasibility_first && members[i].cv != members[j].cv)
        return members[i].cv < members[j].cv ? i : j;
    return rng.uniform_index(2) == 0 ? i : j;
}

} // namespace

std::pair<std::size_t, std::size_t> tournament_select(const Archive& pool,
                                                      bool feasibility_first, Rng& rng) {
    if (pool.size() < 2)
        throw ContractViolation("tournament_select: pool needs at least two members");
    std::size_t p1 = binary_tournament(pool, feasibility_first, rng);
    std::size_t p2 = binary_tournament(pool, feasibility_first, rng);
    return {p1, p2};
}

namespace {

// One restricted-mating pick: a candidate from each archive, the Pareto
// dominant one wins, a coin decides incomparable pairs. When the diversity
// archive dominates the convergence archive pointwise it takes over
// reproduction entirely, which is exactly the failure mode the adaptive
// variant exists to avoid.
const Solution& restricted_pick(const Archive& ca, const Archive& da, Rng& rng) {
    const Solution& from_ca = ca.members[rng.uniform_index(ca.size())];
    const Solution& from_da = da.members[rng.uniform_index(da.size())];
    if (dominates(from_ca, from_da))
        return from_ca;
    if (dominates(from_da, from_ca))
        return from_da;
    return rng.uniform_index(2) == 0 ? from_ca : from_da;
}

} // namespace

std::pair<Solution, Solution> ctaea_baseline_mating(const Archive& ca, const Archive& da,
                                                    Rng& rng) {
    if (ca.members.empty() || da.members.empty())
        throw ContractViolation("ctaea_baseline_mating: empty archive");
    const Solution& p1 = restricted_pick(ca, da, rng);
    const Solution& p2 = restricted_pick(ca, da, rng);
    return {p1, p2};
}

std::pair<double, double> sbx_children(double p1, double p2, double u, double eta_c,
                                       double lower, double upper) {
    const double exponent = 1.0 / (eta_c + 1.0);
    double beta = u <= 0.5 ? std::pow(2.0 * u, exponent)
                           : std::pow(1.0 / (2.0 * (1.0 - u)), exponent);
    double a = 0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2);
    double b = 0.5 * ((1.0 - beta) * p1 + (1.0 + beta) * p2);
    return {std::clamp(a, lower, upper), std::clamp(b, lower, upper)};
}

std::pair<std::vector<double>, std::vector<double>>
sbx_crossover(std::span<const double> p1, std::span<const double> p2,
              const VariationParams& params, std::span<const double> lower,
              std::span<const double> upper, Rng& rng) {
    std::vector<double> c1(p1.begin(), p1.end());
    std::vector<double> c2(p2.begin(), p2.end());
    if (rng.uniform01() > params.p_crossover)
        return {std::move(c1), std::move(c2)};

    for (std::size_t j = 0; j < c1.size(); ++j) {
        // standard per-variable exchange probability and child swap
        if (rng.uniform01() > 0.5)
            continue;
        std::tie(c1[j], c2[j]) =
            sbx_children(p1[j], p2[j], rng.uniform01(), params.eta_c, lower[j], upper[j]);
        if (rng.uniform01() <= 0.5)
            std::swap(c1[j], c2[j]);
    }
    return {std::move(c1), std::move(c2)};
}

double mutate_variable(double y, double u, double eta_m, double lower, double upper) {
    const double exponent = 1.0 / (eta_m + 1.0);
    double span = upper - lower;
    double d_lo = (y - lower) / span;
    double d_hi = (upper - y) / span;
    double dq;
    if (u <= 0.5) {
        double v = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d_lo, eta_m + 1.0);
        dq = std::pow(v, exponent) - 1.0;
    } else {
        double v = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d_hi, eta_m + 1.0);
        dq = 1.0 - std::pow(v, exponent);
    }
    return std::clamp(y + dq * span, lower, upper);
}

std::vector<double> polynomial_mutation(std::span<const double> x,
                                        const VariationParams& params,
                                        std::span<const double> lower,
                                        std::span<const double> upper, Rng& rng) {
    std::vector<double> y(x.begin(), x.end());
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (rng.uniform01() >= params.p_mutation)
            continue;
        y[j] = mutate_variable(y[j], rng.uniform01(), params.eta_m, lower[j], upper[j]);
    }
    return y;
}

} // namespace ctaea
