#include "ctaea/harness.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace ctaea {

using nlohmann::ordered_json;

std::size_t default_capacity(std::size_t m) {
    return default_weights(m).size();
}

namespace {

ordered_json solution_to_json(const Solution& s) {
    ordered_json j;
    j["x"] = s.x;
    j["f"] = s.f;
    j["g"] = s.g;
    j["h"] = s.h;
    j["cv"] = s.cv;
    return j;
}

Solution solution_from_json(const ordered_json& j) {
    Solution s;
    s.x = j.at("x").get<std::vector<double>>();
    s.f = j.at("f").get<std::vector<double>>();
    s.g = j.at("g").get<std::vector<double>>();
    s.h = j.at("h").get<std::vector<double>>();
    s.cv = j.at("cv").get<double>();
    return s;
}

ordered_json archive_to_json(const Archive& archive) {
    ordered_json j = ordered_json::array();
    for (const auto& s : archive.members)
        j.push_back(solution_to_json(s));
    return j;
}

Archive archive_from_json(const ordered_json& j, std::size_t capacity) {
    Archive archive;
    archive.capacity = capacity;
    for (const auto& js : j)
        archive.members.push_back(solution_from_json(js));
    return archive;
}

ordered_json record_to_json_impl(const RunRecord& record, bool with_duration) {
    ordered_json j;
    j["format"] = "ctaea-run/1";
    ordered_json config;
    config["problem"] = record.problem_name;
    config["n"] = record.n;
    config["m"] = record.m;
    config["pop"] = record.capacity;
    config["generations"] = record.generations;
    config["seed"] = record.seed;
    config["algorithm"] = to_string(record.algorithm);
    config["variation"] = {{"p_crossover", record.variation.p_crossover},
                           {"eta_c", record.variation.eta_c},
                           {"p_mutation", record.variation.p_mutation},
                           {"eta_m", record.variation.eta_m}};
    if (record.ref_resolution)
        config["ref_resolution"] = record.ref_resolution;
    j["config"] = std::move(config);

    ordered_json trace = ordered_json::array();
    for (const auto& t : record.trace) {
        ordered_json entry;
        entry["generation"] = t.generation;
        entry["ideal"] = t.ideal;
        entry["ca_feasible"] = t.ca_feasible;
        entry["da_feasible"] = t.da_feasible;
        entry["ca_branch"] = to_string(t.ca_branch);
        if (record.algorithm == AlgorithmKind::ctaea2) {
            entry["rho_c"] = t.rho_c;
            entry["rho_lc"] = t.rho_lc;
            entry["utility"] = t.utility;
            entry["choice"] = t.choice;
            entry["pool"] = to_string(t.pool);
        }
        trace.push_back(std::move(entry));
    }
    j["trace"] = std::move(trace);
    j["final_ca"] = archive_to_json(record.final_ca);
    j["final_da"] = archive_to_json(record.final_da);
    if (record.igd)
        j["igd"] = *record.igd;
    else if (record.igd_undefined)
        j["igd"] = "undefined";
    j["duration_ms"] = with_duration ? record.duration_ms : 0.0;
    return j;
}

CaBranch branch_from_string(const std::string& s) {
    if (s == "underfull")
        return CaBranch::underfull;
    if (s == "exact")
        return CaBranch::exact;
    return CaBranch::overfull;
}

} // namespace

std::string record_to_json(const RunRecord& record) {
    return record_to_json_impl(record, true).dump(2) + "\n";
}

std::string record_fingerprint(const RunRecord& record) {
    return record_to_json_impl(record, false).dump(2) + "\n";
}

RunRecord record_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.value("format", "") != std::string("ctaea-run/1"))
        throw IoError("record_from_json: unrecognized record format");
    RunRecord record;
    const auto& config = j.at("config");
    record.problem_name = config.at("problem").get<std::string>();
    record.n = config.at("n").get<std::size_t>();
    record.m = config.at("m").get<std::size_t>();
    record.capacity = config.at("pop").get<std::size_t>();
    record.generations = config.at("generations").get<std::size_t>();
    record.seed = config.at("seed").get<std::uint64_t>();
    record.algorithm = algorithm_from_string(config.at("algorithm").get<std::string>());
    const auto& variation = config.at("variation");
    record.variation.p_crossover = variation.at("p_crossover").get<double>();
    record.variation.eta_c = variation.at("eta_c").get<double>();
    record.variation.p_mutation = variation.at("p_mutation").get<double>();
    record.variation.eta_m = variation.at("eta_m").get<double>();
    record.ref_resolution = config.value("ref_resolution", std::size_t{0});

    for (const auto& entry : j.at("trace")) {
        GenerationTrace t;
        t.generation = entry.at("generation").get<std::size_t>();
        t.ideal = entry.at("ideal").get<std::vector<double>>();
        t.ca_feasible = entry.at("ca_feasible").get<std::size_t>();
        t.da_feasible = entry.at("da_feasible").get<std::size_t>();
        t.ca_branch = branch_from_string(entry.at("ca_branch").get<std::string>());
        if (entry.contains("rho_c")) {
            t.rho_c = entry.at("rho_c").get<double>();
            t.rho_lc = entry.at("rho_lc").get<double>();
            t.utility = entry.at("utility").get<int>();
            t.choice = entry.at("choice").get<int>();
            t.pool = entry.at("pool").get<std::string>() == "da" ? MatingPool::da
                                                                 : MatingPool::ca;
        }
        record.trace.push_back(std::move(t));
    }
    record.final_ca = archive_from_json(j.at("final_ca"), record.capacity);
    record.final_da = archive_from_json(j.at("final_da"), record.capacity);
    if (j.contains("igd")) {
        if (j.at("igd").is_string())
            record.igd_undefined = true;
        else
            record.igd = j.at("igd").get<double>();
    }
    record.duration_ms = j.value("duration_ms", 0.0);
    return record;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
        if (!out)
            throw IoError("cannot write '" + tmp.string() + "'");
        out << text;
        if (!out.flush())
            throw IoError("short write to '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

void save_record(const RunRecord& record, const std::filesystem::path& path) {
    write_text_atomic(path, record_to_json(record));
}

RunRecord load_record(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read record '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return record_from_json(buf.str());
}

ExperimentPlan plan_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    ExperimentPlan plan;
    for (const auto& p : j.at("problems")) {
        PlannedProblem entry;
        if (p.is_string()) {
            entry.name = p.get<std::string>();
        } else {
            entry.name = p.at("name").get<std::string>();
            entry.m = p.value("m", std::size_t{0});
            entry.n = p.value("n", std::size_t{0});
            entry.pop = p.value("pop", std::size_t{0});
        }
        plan.problems.push_back(std::move(entry));
    }
    for (const auto& a : j.at("algorithms"))
        plan.algorithms.push_back(algorithm_from_string(a.get<std::string>()));
    plan.runs = j.value("runs", std::size_t{31});
    plan.seed_base = j.value("seed_base", std::uint64_t{0});
    plan.generations = j.value("generations", std::size_t{500});
    plan.ref_resolution = j.value("ref_resolution", std::size_t{0});
    plan.output_dir = j.value("output_dir", std::string{"."});
    if (plan.problems.empty() || plan.algorithms.empty() || plan.runs < 1)
        throw ConfigError("plan needs problems, algorithms and runs >= 1");
    return plan;
}

ExperimentPlan load_plan(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read plan '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return plan_from_json(buf.str());
}

std::filesystem::path resolve_output_dir(const std::string& flag_value,
                                         const std::filesystem::path& fallback) {
    if (!flag_value.empty())
        return flag_value;
    if (const char* env = std::getenv("CTAEA_OUT_DIR"); env && *env)
        return env;
    return fallback;
}

ReferenceFront FrontCache::get(const ProblemSpec& problem, std::size_t resolution) {
    std::filesystem::path file =
        dir_ / (problem.name + "_m" + std::to_string(problem.m) + "_r" +
                std::to_string(resolution) + ".front");
    if (std::filesystem::exists(file)) {
        ReferenceFront front = load_front(file.string());
        front.resolution = resolution;
        return front;
    }
    ReferenceFront front = reference_front(problem, resolution);
    std::filesystem::create_directories(dir_);
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    save_front(front, tmp.string());
    std::filesystem::rename(tmp, file);
    return front;
}

std::vector<RunRecord> run_plan(const ExperimentPlan& plan, std::size_t workers) {
    struct Task {
        PlannedProblem problem;
        AlgorithmKind algorithm;
        std::size_t run_index;
    };
    std::vector<Task> tasks;
    for (const auto& problem : plan.problems)
        for (AlgorithmKind algorithm : plan.algorithms)
            for (std::size_t r = 0; r < plan.runs; ++r)
                tasks.push_back({problem, algorithm, r});

    // Fronts are shared per problem; build them up-front from one thread.
    FrontCache cache(plan.output_dir / "fronts");
    std::map<std::string, ReferenceFront> fronts;
    std::map<std::string, ProblemSpec> specs;
    for (const auto& planned : plan.problems) {
        if (specs.contains(planned.name))
            continue;
        ProblemSpec spec = make_problem(planned.name, planned.m, planned.n);
        std::size_t resolution =
            plan.ref_resolution ? plan.ref_resolution : default_front_resolution(spec.m);
        fronts.emplace(planned.name, cache.get(spec, resolution));
        specs.emplace(planned.name, std::move(spec));
    }

    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<std::size_t>(workers, tasks.size());

    std::vector<RunRecord> records(tasks.size());
    std::atomic<std::size_t> cursor{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;

    auto work = [&]() {
        while (true) {
            std::size_t index = cursor.fetch_add(1);
            if (index >= tasks.size())
                return;
            try {
                const Task& task = tasks[index];
                RunConfig config;
                config.problem = specs.at(task.problem.name);
                config.capacity = task.problem.pop ? task.problem.pop
                                                   : default_capacity(config.problem.m);
                config.generations = plan.generations;
                config.seed = plan.seed_base + task.run_index;
                config.algorithm = task.algorithm;

                RunRecord record = run(config);
                const ReferenceFront& front = fronts.at(task.problem.name);
                record.ref_resolution = front.resolution;
                if (auto value = igd(record.final_ca.members, front))
                    record.igd = *value;
                else
                    record.igd_undefined = true;

                std::filesystem::path file =
                    plan.output_dir /
                    (task.problem.name + "_" + to_string(task.algorithm) + "_seed" +
                     std::to_string(record.seed) + ".json");
                save_record(record, file);
                records[index] = std::move(record);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t)
        threads.emplace_back(work);
    for (auto& t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return records;
}

ComparisonReport build_report(std::span<const RunRecord> records, double alpha) {
    ComparisonReport report;
    report.alpha = alpha;

    struct CellData {
        std::vector<const RunRecord*> runs;
    };
    std::map<std::pair<std::string, std::string>, CellData> cells;
    for (const auto& record : records)
        cells[{record.problem_name, to_string(record.algorithm)}].runs.push_back(&record);

    for (auto& [key, cell] : cells) {
        std::sort(cell.runs.begin(), cell.runs.end(),
                  [](const RunRecord* a, const RunRecord* b) { return a->seed < b->seed; });
        for (const RunRecord* r : cell.runs)
            if (r->generations != cell.runs.front()->generations ||
                r->capacity != cell.runs.front()->capacity)
                throw ConfigError("build_report: mixed budgets in cell " + key.first + "/" +
                                  key.second);
        ReportCell out;
        out.problem = key.first;
        out.algorithm = key.second;
        out.runs = cell.runs.size();
        for (const RunRecord* r : cell.runs) {
            if (r->igd)
                out.igd.push_back(*r->igd);
            else
                ++out.undefined_runs;
        }
        if (!out.igd.empty()) {
            SummaryStats stats = summarize(out.igd);
            out.median = stats.median;
            out.stddev = stats.stddev;
        }
        report.cells.push_back(std::move(out));
    }

    // Pairwise marks per problem, every unordered algorithm pair.
    std::map<std::string, std::vector<const ReportCell*>> by_problem;
    for (const auto& cell : report.cells)
        by_problem[cell.problem].push_back(&cell);
    for (const auto& [problem, list] : by_problem) {
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                PairwiseComparison cmp;
                cmp.problem = problem;
                cmp.algorithm_a = list[i]->algorithm;
                cmp.algorithm_b = list[j]->algorithm;
                if (list[i]->igd.size() >= 5 && list[j]->igd.size() >= 5) {
                    RankSumResult test = wilcoxon_rank_sum(list[i]->igd, list[j]->igd, alpha);
                    cmp.p_value = test.p_value;
                    cmp.significant = test.significant;
                    if (test.significant)
                        cmp.mark = test.direction < 0 ? "a_better" : "b_better";
                }
                report.comparisons.push_back(std::move(cmp));
            }
    }
    return report;
}

std::string report_to_json(const ComparisonReport& report) {
    ordered_json j;
    j["format"] = "ctaea-report/1";
    j["alpha"] = report.alpha;
    ordered_json cells = ordered_json::array();
    for (const auto& cell : report.cells) {
        ordered_json c;
        c["problem"] = cell.problem;
        c["algorithm"] = cell.algorithm;
        c["runs"] = cell.runs;
        c["undefined_runs"] = cell.undefined_runs;
        c["median"] = cell.median;
        c["std"] = cell.stddev;
        c["igd"] = cell.igd;
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    ordered_json comparisons = ordered_json::array();
    for (const auto& cmp : report.comparisons) {
        ordered_json c;
        c["problem"] = cmp.problem;
        c["a"] = cmp.algorithm_a;
        c["b"] = cmp.algorithm_b;
        c["p_value"] = cmp.p_value;
        c["significant"] = cmp.significant;
        c["mark"] = cmp.mark;
        comparisons.push_back(std::move(c));
    }
    j["comparisons"] = std::move(comparisons);
    return j.dump(2) + "\n";
}

std::string report_to_text(const ComparisonReport& report) {
    std::ostringstream out;
    out << "IGD by (problem, algorithm); median and population std over runs\n";
    for (const auto& cell : report.cells) {
        out << "  " << cell.problem << " / " << cell.algorithm << ": ";
        if (cell.igd.empty()) {
            out << "no feasible solutions in any run\n";
            continue;
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6e (%.6e)", cell.median, cell.stddev);
        out << buf << " over " << cell.igd.size() << " runs";
        if (cell.undefined_runs)
            out << " (" << cell.undefined_runs << " undefined)";
        out << "\n";
    }
    if (!report.comparisons.empty()) {
        out << "Wilcoxon rank-sum at alpha = " << report.alpha << "\n";
        for (const auto& cmp : report.comparisons) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3e", cmp.p_value);
            out << "  " << cmp.problem << ": " << cmp.algorithm_a << " vs "
                << cmp.algorithm_b << " -> " << cmp.mark << " (p = " << buf << ")\n";
        }
    }
    return out.str();
}

std::string scatter_csv(const Archive& archive) {
    std::ostringstream out;
    out.precision(17);
    std::size_t m = archive.members.empty() ? 0 : archive.members.front().f.size();
    for (std::size_t j = 1; j <= m; ++j)
        out << 'f' << j << ',';
    out << "cv\n";
    for (const auto& s : archive.members) {
        for (double fj : s.f)
            out << fj << ',';
        out << s.cv << '\n';
    }
    return out.str();
}

} // namespace ctaea
