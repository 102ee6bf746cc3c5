#include "ctaea/archives.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ctaea {

const char* to_string(CaBranch branch) {
    switch (branch) {
    case CaBranch::underfull: return "underfull";
    case CaBranch::exact: return "exact";
    case CaBranch::overfull: return "overfull";
    }
    return "?";
}

namespace {

std::vector<Solution> pool_members(const Archive& archive, std::span<const Solution> offspring) {
    std::vector<Solution> pooled;
    pooled.reserve(archive.size() + offspring.size());
    pooled.insert(pooled.end(), archive.members.begin(), archive.members.end());
    pooled.insert(pooled.end(), offspring.begin(), offspring.end());
    return pooled;
}

} // namespace

Archive update_ca(const Archive& ca, std::span<const Solution> offspring,
                  const WeightVectorSet& w, const IdealPoint& z, CaUpdateTrace* trace) {
    const std::size_t capacity = ca.capacity;
    std::vector<Solution> pooled = pool_members(ca, offspring);
    if (pooled.size() < capacity)
        throw ContractViolation("update_ca: fewer candidates than the archive capacity");

    std::vector<std::size_t> feasible, infeasible;
    for (std::size_t i = 0; i < pooled.size(); ++i)
        (pooled[i].feasible() ? feasible : infeasible).push_back(i);

    Archive next;
    next.capacity = capacity;
    if (trace)
        trace->fills.clear();

    if (feasible.size() < capacity) {
        // Keep every feasible solution, fill the gap with the smallest
        // violations; stable order settles ties.
        if (trace)
            trace->branch = CaBranch::underfull;
        std::stable_sort(infeasible.begin(), infeasible.end(),
                         [&](std::size_t a, std::size_t b) {
                             return pooled[a].cv < pooled[b].cv;
                         });
        for (std::size_t i : feasible)
            next.members.push_back(pooled[i]);
        for (std::size_t k = 0; next.members.size() < capacity; ++k)
            next.members.push_back(pooled[infeasible[k]]);
        return next;
    }

    if (feasible.size() == capacity) {
        if (trace)
            trace->branch = CaBranch::exact;
        for (std::size_t i : feasible)
            next.members.push_back(pooled[i]);
        return next;
    }

    // Overfull: trim the feasible set through the subregions.
    if (trace)
        trace->branch = CaBranch::overfull;

    std::vector<Solution> fea;
    fea.reserve(feasible.size());
    for (std::size_t i : feasible)
        fea.push_back(pooled[i]);
    Association assoc = associate(fea, w, z);

    // Fitness of each feasible solution on its own subregion's weight.
    std::vector<double> own_fitness(fea.size());
    for (std::size_t s = 0; s < fea.size(); ++s)
        own_fitness[s] = tchebycheff(fea[s].f, w.vectors[assoc.subregion_of[s]], z);

    std::vector<std::size_t> chosen;       // indices into fea, admission order
    std::vector<double> best_fitness(w.size(), 0.0); // of the kept minimizer
    std::vector<std::vector<std::size_t>> remaining(w.size());

    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& members = assoc.members_of[i];
        if (members.empty())
            continue;
        std::size_t best = members.front();
        for (std::size_t s : members)
            if (own_fitness[s] < own_fitness[best])
                best = s;
        chosen.push_back(best);
        best_fitness[i] = own_fitness[best];
        for (std::size_t s : members)
            if (s != best)
                remaining[i].push_back(s);
    }

    // Admit whichever leftover sits closest (in fitness, against the kept
    // minimizer of its subregion) until the archive is full. The reference
    // fitness stays pinned to the minimizer chosen above.
    while (chosen.size() < capacity) {
        double best_delta = std::numeric_limits<double>::infinity();
        std::size_t best_sub = 0, best_pos = 0;
        bool found = false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (remaining[i].empty())
                continue;
            for (std::size_t p = 0; p < remaining[i].size(); ++p) {
                double delta = std::abs(best_fitness[i] - own_fitness[remaining[i][p]]);
                if (!found || delta < best_delta) {
                    found = true;
                    best_delta = delta;
                    best_sub = i;
                    best_pos = p;
                }
            }
        }
        std::size_t admitted = remaining[best_sub][best_pos];
        chosen.push_back(admitted);
        remaining[best_sub].erase(remaining[best_sub].begin() +
                                  static_cast<std::ptrdiff_t>(best_pos));
        if (trace)
            trace->fills.emplace_back(best_sub, feasible[admitted]);
    }

    for (std::size_t s : chosen)
        next.members.push_back(fea[s]);
    return next;
}

Archive update_da(const Archive& da, std::span<const Solution> offspring,
                  const WeightVectorSet& w, const IdealPoint& z) {
    const std::size_t capacity = da.capacity;
    std::vector<Solution> pooled = pool_members(da, offspring);
    if (pooled.size() < capacity)
        throw ContractViolation("update_da: fewer candidates than the archive capacity");

    Association assoc = associate(pooled, w, z);
    std::vector<double> own_fitness(pooled.size());
    for (std::size_t s = 0; s < pooled.size(); ++s)
        own_fitness[s] = tchebycheff(pooled[s].f, w.vectors[assoc.subregion_of[s]], z);

    std::vector<bool> alive(pooled.size(), true);
    std::size_t alive_count = pooled.size();

    while (alive_count > capacity) {
        // Most crowded subregion, lowest index on ties.
        std::size_t crowded = 0, crowd_size = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (assoc.members_of[i].size() > crowd_size) {
                crowd_size = assoc.members_of[i].size();
                crowded = i;
            }
        // Worst member by fitness; >= prefers the latest inserted on ties,
        // so earlier insertions survive.
        auto& members = assoc.members_of[crowded];
        std::size_t worst_pos = 0;
        for (std::size_t p = 1; p < members.size(); ++p)
            if (own_fitness[members[p]] >= own_fitness[members[worst_pos]])
                worst_pos = p;
        alive[members[worst_pos]] = false;
        members.erase(members.begin() + static_cast<std::ptrdiff_t>(worst_pos));
        --alive_count;
    }

    Archive next;
    next.capacity = capacity;
    for (std::size_t s = 0; s < pooled.size(); ++s)
        if (alive[s])
            next.members.push_back(std::move(pooled[s]));
    return next;
}

} // namespace ctaea
