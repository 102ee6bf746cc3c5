#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ctaea/algorithm.hpp"
#include "ctaea/metrics.hpp"

namespace ctaea {

struct PlannedProblem {
    std::string name;
    std::size_t m = 0;   ///< 0 -> default
    std::size_t n = 0;   ///< 0 -> default
    std::size_t pop = 0; ///< 0 -> default for the objective count
};

struct ExperimentPlan {
    std::vector<PlannedProblem> problems;
    std::vector<AlgorithmKind> algorithms;
    std::size_t runs = 31;
    std::uint64_t seed_base = 0; ///< run r uses seed_base + r
    std::size_t generations = 500;
    std::size_t ref_resolution = 0; ///< 0 -> default
    std::filesystem::path output_dir = ".";
};

ExperimentPlan load_plan(const std::filesystem::path& path);
ExperimentPlan plan_from_json(const std::string& text);

/// Default archive capacity for an objective count (100 / 105 / 210 / ...).
std::size_t default_capacity(std::size_t m);

std::string record_to_json(const RunRecord& record);
RunRecord record_from_json(const std::string& text);
void save_record(const RunRecord& record, const std::filesystem::path& path);
RunRecord load_record(const std::filesystem::path& path);

/// Record serialization with the wall-clock field zeroed; what determinism
/// comparisons look at.
std::string record_fingerprint(const RunRecord& record);

struct ReportCell {
    std::string problem;
    std::string algorithm;
    std::size_t runs = 0;
    std::size_t undefined_runs = 0; ///< runs whose final CA had no feasible member
    std::vector<double> igd;        ///< defined per-run values, seed order
    double median = 0;
    double stddev = 0;
};

struct PairwiseComparison {
    std::string problem;
    std::string algorithm_a;
    std::string algorithm_b;
    double p_value = 1;
    bool significant = false;
    /// "a_better", "b_better" or "indistinguishable" at the report's alpha.
    std::string mark = "indistinguishable";
};

struct ComparisonReport {
    double alpha = 0.05;
    std::vector<ReportCell> cells;
    std::vector<PairwiseComparison> comparisons;
};

/// Executes every (problem, algorithm, run) cell of the plan on a worker
/// pool, computes final IGD values against cached reference fronts and
/// persists one record file per run under the plan's output directory.
/// Records come back in deterministic plan order regardless of scheduling.
std::vector<RunRecord> run_plan(const ExperimentPlan& plan, std::size_t workers = 0);

/// Aggregates persisted records into per-cell statistics and pairwise
/// rank-sum marks. Mixed budgets inside one cell are refused.
ComparisonReport build_report(std::span<const RunRecord> records, double alpha = 0.05);

std::string report_to_json(const ComparisonReport& report);
std::string report_to_text(const ComparisonReport& report);

/// CSV with one row per archive member: f1,...,fm,cv.
std::string scatter_csv(const Archive& archive);

/// Write-temp-then-rename so readers never observe partial files.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

/// Output directory resolution: an explicit flag wins, then the
/// CTAEA_OUT_DIR environment variable, then the fallback.
std::filesystem::path resolve_output_dir(const std::string& flag_value,
                                         const std::filesystem::path& fallback);

/// Disk-cached reference fronts keyed by problem name, objective count and
/// resolution.
class FrontCache {
public:
    explicit FrontCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    ReferenceFront get(const ProblemSpec& problem, std::size_t resolution);

private:
    std::filesystem::path dir_;
};

} // namespace ctaea
