#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ctaea/evolution.hpp"

namespace ctaea {

enum class AlgorithmKind { ctaea2, ctaea_baseline };

std::string to_string(AlgorithmKind kind);
AlgorithmKind algorithm_from_string(const std::string& name);

struct RunConfig {
    ProblemSpec problem;
    std::size_t capacity = 100;   ///< archive size N; must match a lattice size
    std::size_t generations = 500;
    std::uint64_t seed = 0;
    VariationParams variation;    ///< p_mutation <= 0 selects 1/n
    AlgorithmKind algorithm = AlgorithmKind::ctaea2;
};

/// Generations affordable under an evaluation budget: the initial population
/// costs one batch of N evaluations and each generation another, so a
/// partial final batch is never started.
std::size_t generations_for_evaluations(std::size_t evaluations, std::size_t capacity);

struct GenerationTrace {
    std::size_t generation = 0;
    std::vector<double> ideal;
    std::size_t ca_feasible = 0;
    std::size_t da_feasible = 0;
    CaBranch ca_branch = CaBranch::underfull;
    // Adaptive-mating fields; carried only by ctaea2 runs.
    double rho_c = 0;
    double rho_lc = 0;
    int utility = 1;
    int choice = 1;
    MatingPool pool = MatingPool::ca;
};

struct RunRecord {
    // config echo
    std::string problem_name;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t capacity = 0;
    std::size_t generations = 0;
    std::uint64_t seed = 0;
    VariationParams variation;
    AlgorithmKind algorithm = AlgorithmKind::ctaea2;

    std::vector<GenerationTrace> trace;
    Archive final_ca;
    Archive final_da;

    /// Filled by the harness when a reference front is available. A final CA
    /// without feasible members records igd_undefined instead of a value.
    std::optional<double> igd;
    bool igd_undefined = false;
    std::size_t ref_resolution = 0;

    double duration_ms = 0; ///< excluded from determinism comparisons
};

/// One full generational run: a single uniform-random population seeds both
/// archives, then each generation breeds N offspring from the selected pool,
/// refreshes the ideal point and updates both archives. Deterministic given
/// the seed.
RunRecord run(const RunConfig& config);

} // namespace ctaea
