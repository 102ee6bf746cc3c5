#include "ctaea/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ctaea {

namespace {

void enumerate_lattice(std::size_t m, unsigned h, std::vector<unsigned>& partial,
                       std::vector<std::vector<double>>& out) {
    if (partial.size() + 1 == m) {
        std::vector<double> w(m);
        unsigned used = 0;
        for (std::size_t i = 0; i < partial.size(); ++i) {
            w[i] = static_cast<double>(partial[i]) / h;
            used += partial[i];
        }
        w[m - 1] = static_cast<double>(h - used) / h;
        out.push_back(std::move(w));
        return;
    }
    unsigned used = 0;
    for (unsigned k : partial)
        used += k;
    for (unsigned k = 0; k <= h - used; ++k) {
        partial.push_back(k);
        enumerate_lattice(m, h, partial, out);
        partial.pop_back();
    }
}

} // namespace

WeightVectorSet das_dennis_weights(std::size_t m, unsigned h) {
    if (m < 2)
        throw ConfigError("weight set needs m >= 2");
    if (h < 1)
        throw ConfigError("weight set needs lattice parameter h >= 1");
    WeightVectorSet set;
    set.m = m;
    std::vector<unsigned> partial;
    enumerate_lattice(m, h, partial, set.vectors);
    return set;
}

WeightVectorSet das_dennis_weights(std::size_t m, unsigned h_outer, unsigned h_inner) {
    WeightVectorSet outer = das_dennis_weights(m, h_outer);
    WeightVectorSet inner = das_dennis_weights(m, h_inner);
    const double centroid = 1.0 / static_cast<double>(m);
    for (auto& w : inner.vectors) {
        for (double& wj : w)
            wj = 0.5 * wj + 0.5 * centroid;
        outer.vectors.push_back(w);
    }
    for (std::size_t i = 0; i < outer.vectors.size(); ++i)
        for (std::size_t j = i + 1; j < outer.vectors.size(); ++j)
            if (outer.vectors[i] == outer.vectors[j])
                throw ConfigError("two-layer weight set contains duplicate vectors");
    return outer;
}

WeightVectorSet default_weights(std::size_t m) {
    switch (m) {
    case 2: return das_dennis_weights(2, 99);    // 100
    case 3: return das_dennis_weights(3, 13);    // 105
    case 5: return das_dennis_weights(5, 6);     // 210
    case 8: return das_dennis_weights(8, 3, 2);  // 120 + 36 = 156
    case 10: return das_dennis_weights(10, 3, 2); // 220 + 55 = 275
    case 15: return das_dennis_weights(15, 2, 1); // 120 + 15 = 135
    default:
        throw ConfigError("no default weight set for m = " + std::to_string(m));
    }
}

WeightVectorSet weights_for_capacity(std::size_t m, std::size_t capacity) {
    if (capacity < 2)
        throw ConfigError("archive capacity must be at least 2");
    // Single layer first: find h with C(h+m-1, m-1) == capacity.
    for (unsigned h = 1;; ++h) {
        WeightVectorSet probe = das_dennis_weights(m, h);
        if (probe.size() == capacity)
            return probe;
        if (probe.size() > capacity)
            break;
    }
    // Conventional two-layer fallbacks for larger m.
    if (m > 5) {
        for (unsigned ho = 1; ho <= 4; ++ho)
            for (unsigned hi = 1; hi <= ho; ++hi) {
                WeightVectorSet probe = das_dennis_weights(m, ho, hi);
                if (probe.size() == capacity)
                    return probe;
            }
    }
    throw ConfigError("no simplex lattice of size " + std::to_string(capacity) +
                      " exists for m = " + std::to_string(m) +
                      "; pick a population matching C(h+m-1, m-1)");
}

IdealPoint ideal_point(std::size_t m) {
    return IdealPoint{std::vector<double>(m, std::numeric_limits<double>::infinity())};
}

IdealPoint update_ideal(IdealPoint z, std::span<const double> f) {
    if (z.z.size() != f.size())
        throw ContractViolation("update_ideal: dimension mismatch");
    for (std::size_t j = 0; j < f.size(); ++j)
        z.z[j] = std::min(z.z[j], f[j]);
    return z;
}

double tchebycheff(std::span<const double> f, std::span<const double> w, const IdealPoint& z) {
    if (f.size() != w.size() || f.size() != z.z.size())
        throw ContractViolation("tchebycheff: dimension mismatch");
    double value = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        double wj = std::max(w[j], kTchebycheffWeightFloor);
        value = std::max(value, std::abs(f[j] - z.z[j]) / wj);
    }
    return value;
}

Association associate(std::span<const Solution> solutions, const WeightVectorSet& w,
                      const IdealPoint& z) {
    Association assoc;
    assoc.subregion_of.resize(solutions.size());
    assoc.members_of.assign(w.size(), {});

    std::vector<double> translated(w.m);
    for (std::size_t s = 0; s < solutions.size(); ++s) {
        const auto& f = solutions[s].f;
        if (f.size() != w.m)
            throw ContractViolation("associate: objective dimension mismatch");
        double norm2 = 0.0;
        for (std::size_t j = 0; j < w.m; ++j) {
            translated[j] = f[j] - z.z[j];
            norm2 += translated[j] * translated[j];
        }

        std::size_t best = 0;
        if (norm2 > 0.0) {
            // Smallest acute angle == largest cosine; |f - z| is common to
            // every candidate, so compare dot / |w| directly. Strict > keeps
            // the lowest index on ties.
            double best_cos = -std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < w.size(); ++i) {
                const auto& wi = w.vectors[i];
                double dot = 0.0, wnorm2 = 0.0;
                for (std::size_t j = 0; j < w.m; ++j) {
                    dot += translated[j] * wi[j];
                    wnorm2 += wi[j] * wi[j];
                }
                double cosine = dot / std::sqrt(wnorm2);
                if (cosine > best_cos) {
                    best_cos = cosine;
                    best = i;
                }
            }
        }
        assoc.subregion_of[s] = best;
        assoc.members_of[best].push_back(s);
    }
    return assoc;
}

} // namespace ctaea
