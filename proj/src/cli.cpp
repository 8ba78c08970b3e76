#include "leosdn/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "leosdn/pipeline.hpp"

namespace leosdn {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

// Usage-level problem detected after flag parsing (bad k, bad override value).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ordered_json slot_records_json(const ScenarioResult& result) {
    ordered_json slots = ordered_json::array();
    for (const SlotRecord& record : result.per_slot) {
        ordered_json violations = ordered_json::array();
        for (const Violation& v : record.outcome.violations)
            violations.push_back({{"sat_id", v.sat_id}, {"reason", v.reason}});
        slots.push_back({{"slot", record.slot.slot},
                         {"f1", record.outcome.objective.f1_delay},
                         {"f2", record.outcome.objective.f2_controllers},
                         {"total", record.outcome.objective.total},
                         {"raw_mean_delay_ms", record.outcome.objective.raw_mean_delay_ms},
                         {"active_set", record.outcome.activation.active_set()},
                         {"reassignments", record.reassignment_count},
                         {"violations", violations}});
    }
    return slots;
}

ordered_json run_json(const ScenarioResult& result, std::optional<int> k) {
    ordered_json entry;
    entry["approach"] = to_string(result.approach);
    if (k) entry["k"] = *k;
    entry["slots"] = slot_records_json(result);
    return entry;
}

void write_json(const fs::path& path, const ordered_json& value) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file " + path.string());
    out << value.dump(2) << '\n';
}

std::string cdf_filename(Approach approach, int k) {
    if (approach == Approach::kOptDsca) return "cdf_opt-dsca.csv";
    return "cdf_" + to_string(approach) + "_K" + std::to_string(k) + ".csv";
}

void write_run_outputs(const fs::path& out_dir, const ScenarioResult& result,
                       std::optional<int> k) {
    write_cdf_csv(out_dir / cdf_filename(result.approach, k.value_or(0)),
                  build_cdf(pooled_assigned_delays(result)));
    write_timeline_csv(out_dir / ("timeline_" + to_string(result.approach) + ".csv"),
                       timeline(result));
    write_reassignments_csv(out_dir / ("reassignments_" + to_string(result.approach) + ".csv"),
                            reassignment_series(result));
}

struct CommonOptions {
    std::string scenario_path;
    std::string out_dir;
    std::optional<double> w_delay;
    std::optional<long> slots;
    std::optional<double> slot_duration;
    bool dump_matrices = false;
    bool per_slot_cdf = false;
};

// Diagnostic mode: one CDF per slot instead of pooling the whole horizon.
// Slots with no finite assigned delay are skipped.
void write_per_slot_cdfs(const fs::path& dir, const ScenarioResult& result) {
    fs::create_directories(dir);
    for (const SlotRecord& record : result.per_slot) {
        bool any_finite = false;
        for (double v : record.outcome.assigned_delay_ms)
            if (std::isfinite(v)) any_finite = true;
        if (!any_finite) continue;
        write_cdf_csv(dir / ("cdf_slot" + std::to_string(record.slot.slot) + ".csv"),
                      build_cdf(record.outcome.assigned_delay_ms));
    }
}

ScenarioConfig load_with_overrides(const CommonOptions& opts) {
    ScenarioConfig scenario = load_scenario(opts.scenario_path);
    if (opts.w_delay) {
        if (!(*opts.w_delay >= 0.0 && *opts.w_delay <= 1.0))
            throw UsageError("--w-delay must be in [0, 1]");
        scenario.weights.w_delay = *opts.w_delay;
    }
    if (opts.slots) {
        if (*opts.slots < 1) throw UsageError("--slots must be >= 1");
        scenario.horizon_slots = *opts.slots;
    }
    if (opts.slot_duration) {
        if (!(*opts.slot_duration > 0.0)) throw UsageError("--slot-duration must be > 0");
        scenario.slot_duration_s = *opts.slot_duration;
    }
    return scenario;
}

int cmd_run(const CommonOptions& opts, const std::string& approach_name, std::optional<int> k) {
    const ScenarioConfig scenario = load_with_overrides(opts);
    const Approach approach = approach_from_string(approach_name);
    const int m = scenario.num_stations();

    std::optional<int> effective_k;
    if (approach == Approach::kOptDsca) {
        if (k) throw UsageError("--k is not applicable to opt-dsca (the solver chooses K)");
    } else {
        effective_k = k.value_or(m);
        if (*effective_k < 1 || *effective_k > m)
            throw UsageError("--k must be in [1, " + std::to_string(m) + "]");
    }

    const DelayPipeline pipeline = compute_delays(scenario);
    const ScenarioResult result =
        run_approach(pipeline, scenario, approach, effective_k.value_or(m));

    fs::create_directories(opts.out_dir);
    write_run_outputs(opts.out_dir, result, effective_k);
    if (opts.dump_matrices)
        write_matrix_dumps(fs::path(opts.out_dir) / "matrices", pipeline.matrices);
    if (opts.per_slot_cdf) write_per_slot_cdfs(fs::path(opts.out_dir) / "cdf_slots", result);

    ordered_json summary;
    summary["config_digest"] = scenario.digest();
    summary["w_delay"] = scenario.weights.w_delay;
    summary["approach"] = to_string(approach);
    if (effective_k) summary["k"] = *effective_k;
    summary["slots"] = slot_records_json(result);
    write_json(fs::path(opts.out_dir) / "summary.json", summary);

    std::cout << "wrote " << to_string(approach) << " results for " << result.per_slot.size()
              << " slots to " << opts.out_dir << "\n";
    return kExitOk;
}

int cmd_sweep(const CommonOptions& opts, const std::vector<std::string>& approach_names,
              const std::string& k_range) {
    const ScenarioConfig scenario = load_with_overrides(opts);
    const int m = scenario.num_stations();

    std::vector<Approach> approaches;
    if (approach_names.empty()) {
        approaches = scenario.approaches;
    } else {
        for (const std::string& name : approach_names)
            approaches.push_back(approach_from_string(name));
    }

    std::vector<int> k_values = scenario.k_values;
    if (!k_range.empty()) {
        const size_t sep = k_range.find("..");
        if (sep == std::string::npos)
            throw UsageError("--k-range expects the form a..b, got '" + k_range + "'");
        int lo = 0;
        int hi = 0;
        try {
            lo = std::stoi(k_range.substr(0, sep));
            hi = std::stoi(k_range.substr(sep + 2));
        } catch (const std::exception&) {
            throw UsageError("--k-range expects integers in a..b, got '" + k_range + "'");
        }
        if (lo > hi) throw UsageError("--k-range bounds are reversed");
        k_values.clear();
        for (int k = lo; k <= hi; ++k) k_values.push_back(k);
    }
    for (int k : k_values)
        if (k < 1 || k > m)
            throw UsageError("k value " + std::to_string(k) + " outside [1, " +
                             std::to_string(m) + "]");

    // Delay matrices are computed once and shared by every (approach, K)
    // combination.
    const DelayPipeline pipeline = compute_delays(scenario);
    fs::create_directories(opts.out_dir);

    ordered_json runs = ordered_json::array();
    for (Approach approach : approaches) {
        if (approach == Approach::kOptDsca) {
            const ScenarioResult result = run_approach(pipeline, scenario, approach, m);
            write_cdf_csv(fs::path(opts.out_dir) / cdf_filename(approach, 0),
                          build_cdf(pooled_assigned_delays(result)));
            runs.push_back(run_json(result, std::nullopt));
        } else {
            for (int k : k_values) {
                const ScenarioResult result = run_approach(pipeline, scenario, approach, k);
                write_cdf_csv(fs::path(opts.out_dir) / cdf_filename(approach, k),
                              build_cdf(pooled_assigned_delays(result)));
                runs.push_back(run_json(result, k));
            }
        }
    }

    ordered_json summary;
    summary["config_digest"] = scenario.digest();
    summary["w_delay"] = scenario.weights.w_delay;
    summary["runs"] = runs;
    write_json(fs::path(opts.out_dir) / "summary.json", summary);

    std::cout << "wrote sweep results (" << runs.size() << " runs) to " << opts.out_dir << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Time-slotted LEO constellation simulator for satellite-to-controller "
                 "assignment (ssca, dsca, opt-dsca)"};
    app.require_subcommand(1);

    CommonOptions run_opts;
    std::string approach_name;
    int k_value = 0;
    CLI::App* run = app.add_subcommand("run", "Run one approach over the scenario horizon");
    run->add_option("--scenario", run_opts.scenario_path, "Scenario config file")->required();
    run->add_option("--approach", approach_name, "ssca, dsca, or opt-dsca")->required();
    CLI::Option* k_opt = run->add_option("--k", k_value, "Active controller count (ssca/dsca)");
    run->add_option("--w-delay", run_opts.w_delay, "Override weights.w_delay");
    run->add_option("--slots", run_opts.slots, "Override run.horizon_slots");
    run->add_option("--slot-duration", run_opts.slot_duration, "Override run.slot_duration_s");
    run->add_option("--out", run_opts.out_dir, "Output directory")->required();
    run->add_flag("--dump-matrices", run_opts.dump_matrices, "Dump per-slot delay matrices");
    run->add_flag("--per-slot-cdf", run_opts.per_slot_cdf,
                  "Also write one diagnostic CDF per slot");

    CommonOptions sweep_opts;
    std::vector<std::string> approach_names;
    std::string k_range;
    CLI::App* sweep =
        app.add_subcommand("sweep", "Run several approaches over a range of controller counts");
    sweep->add_option("--scenario", sweep_opts.scenario_path, "Scenario config file")->required();
    sweep->add_option("--approaches", approach_names, "Comma-separated approach list")
        ->delimiter(',');
    sweep->add_option("--k-range", k_range, "Controller count range a..b");
    sweep->add_option("--w-delay", sweep_opts.w_delay, "Override weights.w_delay");
    sweep->add_option("--slots", sweep_opts.slots, "Override run.horizon_slots");
    sweep->add_option("--slot-duration", sweep_opts.slot_duration,
                      "Override run.slot_duration_s");
    sweep->add_option("--out", sweep_opts.out_dir, "Output directory")->required();

    std::vector<std::string> cli_args(args.rbegin(), args.rend());  // CLI11 wants reversed args
    try {
        app.parse(cli_args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) {
            std::optional<int> k_flag;
            if (k_opt->count() > 0) k_flag = k_value;
            return cmd_run(run_opts, approach_name, k_flag);
        }
        return cmd_sweep(sweep_opts, approach_names, k_range);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const InfeasibleScenarioError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace leosdn
