// Command-line front end: single runs, benchmark plans, report assembly and
// data emission for plotting.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "ctaea/harness.hpp"

namespace fs = std::filesystem;
using namespace ctaea;

namespace {

// Relative output paths land under CTAEA_OUT_DIR when it is set.
fs::path out_path(const std::string& flag) {
    fs::path p(flag);
    if (p.is_relative())
        if (const char* env = std::getenv("CTAEA_OUT_DIR"); env && *env)
            return fs::path(env) / p;
    return p;
}

int cmd_run(const std::string& problem_name, std::size_t m, std::size_t n,
            const std::string& algorithm, std::size_t pop, std::size_t generations,
            std::size_t evaluations, std::uint64_t seed, std::size_t ref_resolution,
            const std::string& out) {
    RunConfig config;
    config.problem = make_problem(problem_name, m, n);
    config.capacity = pop ? pop : default_capacity(config.problem.m);
    config.generations =
        evaluations ? generations_for_evaluations(evaluations, config.capacity) : generations;
    config.seed = seed;
    config.algorithm = algorithm_from_string(algorithm);

    RunRecord record = run(config);

    std::size_t resolution =
        ref_resolution ? ref_resolution : default_front_resolution(config.problem.m);
    ReferenceFront front = reference_front(config.problem, resolution);
    record.ref_resolution = resolution;
    if (auto value = igd(record.final_ca.members, front))
        record.igd = *value;
    else
        record.igd_undefined = true;

    fs::path file = out_path(out);
    save_record(record, file);
    std::cout << "wrote " << file.string() << " (igd: ";
    if (record.igd)
        std::cout << *record.igd;
    else
        std::cout << "undefined";
    std::cout << ")\n";
    return 0;
}

int cmd_bench(const std::string& plan_file, const std::string& out_flag,
              std::size_t workers) {
    ExperimentPlan plan = load_plan(plan_file);
    plan.output_dir = resolve_output_dir(out_flag, plan.output_dir);

    std::vector<RunRecord> records = run_plan(plan, workers);
    ComparisonReport report = build_report(records);
    write_text_atomic(plan.output_dir / "report.json", report_to_json(report));
    write_text_atomic(plan.output_dir / "report.txt", report_to_text(report));
    std::cout << report_to_text(report);
    std::cout << records.size() << " records under " << plan.output_dir.string() << "\n";
    return 0;
}

int cmd_scatter(const std::string& record_file, const std::string& archive_name,
                const std::string& out) {
    RunRecord record = load_record(record_file);
    const Archive& archive = archive_name == "da" ? record.final_da : record.final_ca;
    fs::path file = out_path(out);
    write_text_atomic(file, scatter_csv(archive));
    std::cout << "wrote " << file.string() << " (" << archive.size() << " rows)\n";
    return 0;
}

int cmd_report(const std::string& records_dir, const std::string& out) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(records_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<RunRecord> records;
    for (const auto& file : files) {
        try {
            records.push_back(load_record(file));
        } catch (const IoError&) {
            // non-record json (e.g. a report); skip
        }
    }
    if (records.empty())
        throw ConfigError("no run records found under '" + records_dir + "'");

    ComparisonReport report = build_report(records);
    if (!out.empty())
        write_text_atomic(out_path(out), report_to_json(report));
    std::cout << report_to_text(report);
    return 0;
}

int cmd_fronts(const std::string& problem_name, std::size_t m, std::size_t n,
               std::size_t ref_resolution, const std::string& out_dir) {
    ProblemSpec problem = make_problem(problem_name, m, n);
    std::size_t resolution =
        ref_resolution ? ref_resolution : default_front_resolution(problem.m);
    FrontCache cache(out_path(out_dir));
    ReferenceFront front = cache.get(problem, resolution);
    std::cout << problem.name << ": " << front.points.size() << " reference points ("
              << resolution << " requested)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-archive constrained multi-objective evolutionary optimizer"};
    app.require_subcommand(1);

    std::string problem = "ctp6", algorithm = "ctaea2";
    std::size_t m = 0, n = 0, pop = 0, generations = 500, evaluations = 0;
    std::size_t ref_resolution = 0, workers = 0;
    std::uint64_t seed = 0;
    std::string out, plan_file, record_file, records_dir, archive_name = "ca";

    auto* run_cmd = app.add_subcommand("run", "Execute a single seeded run");
    run_cmd->add_option("--problem", problem, "Problem id (ctp1..ctp8, dc1_dtlz1, ...)");
    run_cmd->add_option("--m", m, "Objective count override (0 = default)");
    run_cmd->add_option("--n", n, "Decision dimension override (0 = default)");
    run_cmd->add_option("--algorithm", algorithm, "ctaea2 | ctaea_baseline");
    run_cmd->add_option("--pop", pop, "Archive capacity N (0 = default for m)");
    run_cmd->add_option("--generations", generations, "Generation budget");
    run_cmd->add_option("--evaluations", evaluations,
                        "Evaluation budget; overrides --generations when set");
    run_cmd->add_option("--seed", seed, "Run seed");
    run_cmd->add_option("--ref-resolution", ref_resolution, "Reference front size");
    run_cmd->add_option("--out", out, "Run record file")->default_str("run.json");

    auto* bench_cmd = app.add_subcommand("bench", "Execute a full experiment plan");
    bench_cmd->add_option("--plan", plan_file, "Plan file (json)")->required();
    bench_cmd->add_option("--out", out, "Output directory (overrides the plan)");
    bench_cmd->add_option("--workers", workers, "Worker threads (0 = hardware)");

    auto* scatter_cmd = app.add_subcommand("scatter", "Emit archive objectives as csv");
    scatter_cmd->add_option("--record", record_file, "Run record file")->required();
    scatter_cmd->add_option("--archive", archive_name, "ca | da");
    scatter_cmd->add_option("--out", out, "Output csv")->default_str("scatter.csv");

    auto* report_cmd = app.add_subcommand("report", "Rebuild a report from stored records");
    report_cmd->add_option("--records", records_dir, "Directory of run records")->required();
    report_cmd->add_option("--out", out, "Report json file (optional)");

    auto* fronts_cmd = app.add_subcommand("fronts", "Pre-generate a reference front");
    fronts_cmd->add_option("--problem", problem, "Problem id")->required();
    fronts_cmd->add_option("--m", m, "Objective count override");
    fronts_cmd->add_option("--n", n, "Decision dimension override");
    fronts_cmd->add_option("--ref-resolution", ref_resolution, "Reference front size");
    fronts_cmd->add_option("--out", out, "Cache directory")->default_str("fronts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed())
            return cmd_run(problem, m, n, algorithm, pop, generations, evaluations, seed,
                           ref_resolution, out.empty() ? "run.json" : out);
        if (bench_cmd->parsed())
            return cmd_bench(plan_file, out, workers);
        if (scatter_cmd->parsed())
            return cmd_scatter(record_file, archive_name, out.empty() ? "scatter.csv" : out);
        if (report_cmd->parsed())
            return cmd_report(records_dir, out);
        if (fronts_cmd->parsed())
            return cmd_fronts(problem, m, n, ref_resolution, out.empty() ? "fronts" : out);
    } catch (const ConfigError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    } catch (const IoError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 3;
    } catch (const std::filesystem::filesystem_error& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 3;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
