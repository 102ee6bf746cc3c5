#include "ctaea/algorithm.hpp"

#include <chrono>

namespace ctaea {

std::string to_string(AlgorithmKind kind) {
    return kind == AlgorithmKind::ctaea2 ? "ctaea2" : "ctaea_baseline";
}

AlgorithmKind algorithm_from_string(const std::string& name) {
    if (name == "ctaea2")
        return AlgorithmKind::ctaea2;
    if (name == "ctaea_baseline")
        return AlgorithmKind::ctaea_baseline;
    throw ConfigError("unknown algorithm '" + name + "' (ctaea2 | ctaea_baseline)");
}

std::size_t generations_for_evaluations(std::size_t evaluations, std::size_t capacity) {
    if (capacity == 0)
        throw ContractViolation("generations_for_evaluations: zero capacity");
    std::size_t batches = evaluations / capacity;
    return batches == 0 ? 0 : batches - 1;
}

namespace {

std::vector<Solution> random_population(const ProblemSpec& problem, std::size_t count,
                                        Rng& rng) {
    std::vector<Solution> population;
    population.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<double> x(problem.n);
        for (std::size_t j = 0; j < problem.n; ++j)
            x[j] = rng.uniform(problem.lower[j], problem.upper[j]);
        population.push_back(evaluate(problem, std::move(x)));
    }
    return population;
}

std::size_t feasible_count(const Archive& archive) {
    std::size_t count = 0;
    for (const auto& s : archive.members)
        count += s.feasible() ? 1 : 0;
    return count;
}

} // namespace

RunRecord run(const RunConfig& config) {
    validate(config.problem);
    const ProblemSpec& problem = config.problem;
    const std::size_t capacity = config.capacity;
    if (capacity < 2)
        throw ConfigError("run: archive capacity must be at least 2");

    WeightVectorSet weights = weights_for_capacity(problem.m, capacity);

    VariationParams variation = config.variation;
    if (variation.p_mutation <= 0.0)
        variation.p_mutation = 1.0 / static_cast<double>(problem.n);

    RunRecord record;
    record.problem_name = problem.name;
    record.n = problem.n;
    record.m = problem.m;
    record.capacity = capacity;
    record.generations = config.generations;
    record.seed = config.seed;
    record.variation = variation;
    record.algorithm = config.algorithm;

    const auto started = std::chrono::steady_clock::now();
    Rng rng(config.seed);

    std::vector<Solution> population = random_population(problem, capacity, rng);
    IdealPoint ideal = ideal_point(problem.m);
    for (const auto& s : population)
        ideal = update_ideal(std::move(ideal), s.f);

    Archive ca{capacity, population};
    Archive da{capacity, std::move(population)};
    MatingState state;
    state.last_ca = ca;
    state.choice = 1;
    state.utility = 1;

    const std::size_t pairs = (capacity + 1) / 2;
    record.trace.reserve(config.generations);

    for (std::size_t gen = 1; gen <= config.generations; ++gen) {
        GenerationTrace entry;
        entry.generation = gen;

        // Pick this generation's mating pool.
        const Archive* pool = &ca;
        bool pool_is_ca = true;
        if (config.algorithm == AlgorithmKind::ctaea2) {
            StagnationReport report = assess_stagnation(ca, state);
            auto [selected, next_choice] = choose_pool(report.utility, state.choice);
            state.utility = report.utility;
            state.choice = next_choice;
            pool_is_ca = selected == MatingPool::ca;
            pool = pool_is_ca ? &ca : &da;
            entry.rho_c = report.rho_c;
            entry.rho_lc = report.rho_lc;
            entry.utility = report.utility;
            entry.choice = next_choice;
            entry.pool = selected;
        }

        // Breed exactly N offspring.
        std::vector<Solution> offspring;
        offspring.reserve(capacity + 1);
        for (std::size_t pair = 0; pair < pairs; ++pair) {
            const Solution* p1;
            const Solution* p2;
            Solution b1, b2;
            if (config.algorithm == AlgorithmKind::ctaea2) {
                auto [i1, i2] = tournament_select(*pool, pool_is_ca, rng);
                p1 = &pool->members[i1];
                p2 = &pool->members[i2];
            } else {
                std::tie(b1, b2) = ctaea_baseline_mating(ca, da, rng);
                p1 = &b1;
                p2 = &b2;
            }
            auto [c1, c2] = sbx_crossover(p1->x, p2->x, variation, problem.lower,
                                          problem.upper, rng);
            c1 = polynomial_mutation(c1, variation, problem.lower, problem.upper, rng);
            c2 = polynomial_mutation(c2, variation, problem.lower, problem.upper, rng);
            offspring.push_back(evaluate(problem, std::move(c1)));
            if (offspring.size() < capacity)
                offspring.push_back(evaluate(problem, std::move(c2)));
        }

        for (const auto& s : offspring)
            ideal = update_ideal(std::move(ideal), s.f);

        CaUpdateTrace ca_trace;
        Archive next_ca = update_ca(ca, offspring, weights, ideal, &ca_trace);
        da = update_da(da, offspring, weights, ideal);

        // S^t keeps the pre-update CA so the next stagnation check compares
        // consecutive generations.
        state.last_ca = std::move(ca);
        ca = std::move(next_ca);

        entry.ideal = ideal.z;
        entry.ca_feasible = feasible_count(ca);
        entry.da_feasible = feasible_count(da);
        entry.ca_branch = ca_trace.branch;
        record.trace.push_back(std::move(entry));
    }

    record.final_ca = std::move(ca);
    record.final_da = std::move(da);
    record.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return record;
}

} // namespace ctaea
