#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace oracles {

using ctaea::IdealPoint;
using ctaea::Solution;
using ctaea::WeightVectorSet;

namespace {

bool dom(const std::vector<double>& a, const std::vector<double>& b) {
    bool better = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > b[j])
            return false;
        if (a[j] < b[j])
            better = true;
    }
    return better;
}

double tch(const std::vector<double>& f, const std::vector<double>& w, const IdealPoint& z) {
    double value = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j)
        value = std::max(value, std::abs(f[j] - z.z[j]) / std::max(w[j], 1e-6));
    return value;
}

double angle_to(const std::vector<double>& f, const std::vector<double>& w,
                const IdealPoint& z) {
    double dot = 0.0, fn = 0.0, wn = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        double t = f[j] - z.z[j];
        dot += t * w[j];
        fn += t * t;
        wn += w[j] * w[j];
    }
    double denom = std::sqrt(fn) * std::sqrt(wn);
    return std::acos(std::clamp(dot / denom, -1.0, 1.0));
}

bool zero_translated(const std::vector<double>& f, const IdealPoint& z) {
    for (std::size_t j = 0; j < f.size(); ++j)
        if (f[j] != z.z[j])
            return false;
    return true;
}

} // namespace

std::vector<Solution> naive_nondominated(const std::vector<Solution>& s) {
    std::vector<Solution> kept;
    for (std::size_t i = 0; i < s.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < s.size() && !dominated; ++j)
            if (j != i && dom(s[j].f, s[i].f))
                dominated = true;
        if (!dominated)
            kept.push_back(s[i]);
    }
    return kept;
}

std::vector<std::size_t> naive_association(const std::vector<Solution>& s,
                                           const WeightVectorSet& w, const IdealPoint& z) {
    std::vector<std::size_t> assignment(s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (zero_translated(s[i].f, z))
            continue; // degenerate vector: subregion 0
        std::size_t best = 0;
        double best_angle = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < w.size(); ++k) {
            double angle = angle_to(s[i].f, w.vectors[k], z);
            if (angle < best_angle) {
                best_angle = angle;
                best = k;
            }
        }
        assignment[i] = best;
    }
    return assignment;
}

std::vector<Solution> naive_update_ca(const std::vector<Solution>& ca,
                                      const std::vector<Solution>& q, std::size_t capacity,
                                      const WeightVectorSet& w, const IdealPoint& z) {
    std::vector<Solution> pool = ca;
    pool.insert(pool.end(), q.begin(), q.end());

    std::vector<Solution> fea, infea;
    for (const auto& s : pool)
        (s.cv == 0.0 ? fea : infea).push_back(s);

    std::vector<Solution> result;
    if (fea.size() < capacity) {
        result = fea;
        while (result.size() < capacity) {
            std::size_t pick = 0;
            for (std::size_t i = 1; i < infea.size(); ++i)
                if (infea[i].cv < infea[pick].cv)
                    pick = i;
            result.push_back(infea[pick]);
            infea.erase(infea.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        return result;
    }
    if (fea.size() == capacity)
        return fea;

    // Overfull branch.
    std::vector<std::size_t> assignment = naive_association(fea, w, z);
    std::vector<std::vector<std::size_t>> delta(w.size());
    for (std::size_t i = 0; i < fea.size(); ++i)
        delta[assignment[i]].push_back(i);

    std::vector<std::size_t> chosen;
    std::vector<std::size_t> best_of(w.size(), 0); // the kept minimizer per subregion
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (delta[k].empty())
            continue;
        std::size_t best = delta[k][0];
        for (std::size_t i : delta[k])
            if (tch(fea[i].f, w.vectors[k], z) < tch(fea[best].f, w.vectors[k], z))
                best = i;
        chosen.push_back(best);
        best_of[k] = best;
        delta[k].erase(std::find(delta[k].begin(), delta[k].end(), best));
    }

    while (chosen.size() < capacity) {
        // Per-subregion smallest fitness difference to the kept minimizer,
        // then the subregion with the overall smallest difference.
        double global_best = std::numeric_limits<double>::infinity();
        std::size_t pick_sub = 0, pick_member = 0;
        bool have = false;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (delta[k].empty())
                continue;
            double ref = tch(fea[best_of[k]].f, w.vectors[k], z);
            double sub_best = std::numeric_limits<double>::infinity();
            std::size_t sub_member = 0;
            for (std::size_t i : delta[k]) {
                double diff = std::abs(ref - tch(fea[i].f, w.vectors[k], z));
                if (diff < sub_best) {
                    sub_best = diff;
                    sub_member = i;
                }
            }
            if (!have || sub_best < global_best) {
                have = true;
                global_best = sub_best;
                pick_sub = k;
                pick_member = sub_member;
            }
        }
        chosen.push_back(pick_member);
        delta[pick_sub].erase(
            std::find(delta[pick_sub].begin(), delta[pick_sub].end(), pick_member));
    }

    std::vector<Solution> result2;
    for (std::size_t i : chosen)
        result2.push_back(fea[i]);
    return result2;
}

std::vector<Solution> naive_update_da(const std::vector<Solution>& da,
                                      const std::vector<Solution>& q, std::size_t capacity,
                                      const WeightVectorSet& w, const IdealPoint& z) {
    std::vector<Solution> pool = da;
    pool.insert(pool.end(), q.begin(), q.end());

    std::vector<std::size_t> assignment = naive_association(pool, w, z);
    std::vector<std::vector<std::size_t>> delta(w.size());
    for (std::size_t i = 0; i < pool.size(); ++i)
        delta[assignment[i]].push_back(i);

    std::vector<bool> alive(pool.size(), true);
    std::size_t count = pool.size();
    while (count > capacity) {
        std::size_t crowded = 0;
        for (std::size_t k = 1; k < w.size(); ++k)
            if (delta[k].size() > delta[crowded].size())
                crowded = k;
        std::size_t worst = delta[crowded][0];
        for (std::size_t i : delta[crowded])
            if (tch(pool[i].f, w.vectors[crowded], z) >=
                tch(pool[worst].f, w.vectors[crowded], z))
                worst = i; // >= drops the latest inserted on ties
        alive[worst] = false;
        delta[crowded].erase(std::find(delta[crowded].begin(), delta[crowded].end(), worst));
        --count;
    }

    std::vector<Solution> result;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (alive[i])
            result.push_back(pool[i]);
    return result;
}

double naive_igd(const std::vector<std::vector<double>>& archive,
                 const std::vector<std::vector<double>>& reference) {
    double total = 0.0;
    for (const auto& r : reference) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& a : archive) {
            double d2 = 0.0;
            for (std::size_t j = 0; j < r.size(); ++j)
                d2 += (r[j] - a[j]) * (r[j] - a[j]);
            best = std::min(best, std::sqrt(d2));
        }
        total += best;
    }
    return total / static_cast<double>(reference.size());
}

double naive_ranksum_p(const std::vector<double>& xs, const std::vector<double>& ys) {
    std::vector<double> pooled = xs;
    pooled.insert(pooled.end(), ys.begin(), ys.end());
    std::vector<std::size_t> order(pooled.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });

    std::vector<double> rank(pooled.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && pooled[order[j + 1]] == pooled[order[i]])
            ++j;
        for (std::size_t k = i; k <= j; ++k)
            rank[order[k]] = 0.5 * static_cast<double>(i + j) + 1.0;
        i = j + 1;
    }

    double observed = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k)
        observed += rank[k];
    const double mu =
        static_cast<double>(xs.size()) * static_cast<double>(pooled.size() + 1) / 2.0;
    const double threshold = std::abs(observed - mu) - 1e-12;

    std::vector<double> sorted_ranks(rank.begin(), rank.end());
    std::vector<std::size_t> pick(xs.size());
    std::iota(pick.begin(), pick.end(), 0);
    std::size_t extreme = 0, total = 0;
    while (true) {
        double sum = 0.0;
        for (std::size_t p : pick)
            sum += sorted_ranks[p];
        ++total;
        if (std::abs(sum - mu) >= threshold)
            ++extreme;
        std::size_t pos = pick.size();
        bool advanced = false;
        while (pos > 0) {
            --pos;
            if (pick[pos] != pos + pooled.size() - pick.size()) {
                ++pick[pos];
                for (std::size_t k = pos + 1; k < pick.size(); ++k)
                    pick[k] = pick[k - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            break;
    }
    return static_cast<double>(extreme) / static_cast<double>(total);
}

} // namespace oracles
