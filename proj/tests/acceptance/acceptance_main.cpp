// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// hard criterion fails. Expects the default scenario file as argv[1].

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "leosdn/cli.hpp"
#include "leosdn/pipeline.hpp"
#include "support/exhaustive_oracle.hpp"

using namespace leosdn;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool passed, const std::string& detail = "") {
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!passed) ++g_failures;
}

void warn(const std::string& message) { std::cout << "[WARN] " << message << "\n"; }

// --- criterion 1: opt-dsca equals the exhaustive (subset, assignment) oracle

void criterion_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240901);
    int mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto instance = testsupport::random_instance(rng, 4, 3);
        const SolveOutcome solver =
            solve_opt_dsca(instance.matrix, instance.bounds, instance.weights);
        const auto oracle =
            testsupport::brute_force_opt_dsca(instance.matrix, instance.bounds, instance.weights);

        const bool match = std::abs(solver.objective.total - oracle.total) <= 1e-12 &&
                           solver.activation.active_set() == oracle.active_set &&
                           solver.assignment.controller_of == oracle.controller_of &&
                           solver.violations.empty() == !oracle.has_violations;
        if (!match) ++mismatches;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(1, "oracle equivalence on 200 random instances", mismatches == 0 && elapsed < 10.0,
           std::to_string(mismatches) + " mismatches, " + std::to_string(elapsed) + " s");
}

// --- criteria 2 and 3: default-scenario behavior

struct DefaultRuns {
    ScenarioConfig scenario;
    DelayPipeline pipeline;
    std::map<int, ScenarioResult> ssca;  // by K
    std::map<int, ScenarioResult> dsca;  // by K
    ScenarioResult opt;
};

DefaultRuns run_default_scenario(const fs::path& scenario_path) {
    DefaultRuns runs;
    runs.scenario = load_scenario(scenario_path);
    runs.pipeline = compute_delays(runs.scenario);
    for (int k = 2; k <= 7; ++k) {
        runs.ssca.emplace(k, run_approach(runs.pipeline, runs.scenario, Approach::kSsca, k));
        runs.dsca.emplace(k, run_approach(runs.pipeline, runs.scenario, Approach::kDsca, k));
    }
    runs.opt = run_approach(runs.pipeline, runs.scenario, Approach::kOptDsca, 7);
    return runs;
}

int total_violations(const ScenarioResult& result) {
    int count = 0;
    for (const SlotRecord& record : result.per_slot)
        count += static_cast<int>(record.outcome.violations.size());
    return count;
}

void criterion_dominance(const DefaultRuns& runs) {
    bool ok = true;
    std::string detail;

    int violations = total_violations(runs.opt);
    for (const auto& [k, result] : runs.ssca) violations += total_violations(result);
    for (const auto& [k, result] : runs.dsca) violations += total_violations(result);
    if (violations != 0) {
        ok = false;
        detail = std::to_string(violations) + " constraint violations in the compared runs";
    }

    // Pooled CDF dominance: with equal sample counts, sorted-sample
    // comparison is quantile comparison.
    for (int k = 2; k <= 7 && ok; ++k) {
        std::vector<double> dsca_samples = pooled_assigned_delays(runs.dsca.at(k));
        std::vector<double> ssca_samples = pooled_assigned_delays(runs.ssca.at(k));
        std::sort(dsca_samples.begin(), dsca_samples.end());
        std::sort(ssca_samples.begin(), ssca_samples.end());
        for (size_t i = 0; i < dsca_samples.size(); ++i) {
            if (!(dsca_samples[i] <= ssca_samples[i])) {
                ok = false;
                detail = "dsca K=" + std::to_string(k) + " quantile above ssca at sample " +
                         std::to_string(i);
                break;
            }
        }
    }

    // Opt-dsca per slot must not lose to any fixed-K dsca evaluation of the
    // same joint objective.
    for (size_t l = 0; l < runs.opt.per_slot.size() && ok; ++l) {
        const double opt_total = runs.opt.per_slot[l].outcome.objective.total;
        for (int k = 2; k <= 7; ++k) {
            const double fixed_total = runs.dsca.at(k).per_slot[l].outcome.objective.total;
            if (!(opt_total <= fixed_total)) {
                ok = false;
                detail = "opt-dsca total above dsca K=" + std::to_string(k) + " at slot " +
                         std::to_string(l);
                break;
            }
        }
    }

    report(2, "dsca dominates ssca per K; opt-dsca dominates fixed-K dsca", ok, detail);
}

void criterion_active_range(const DefaultRuns& runs) {
    bool ok = true;
    std::string detail;

    std::map<int, int> count_frequency;
    for (const SlotRecord& record : runs.opt.per_slot) {
        const int active = record.outcome.activation.active_count();
        ++count_frequency[active];
        if (active < 1 || active > 7) {
            ok = false;
            detail = "active count " + std::to_string(active) + " outside [1, 7]";
            break;
        }
        const double mean = record.outcome.objective.raw_mean_delay_ms;
        if (!(mean >= 5.0 && mean <= 150.0)) {
            ok = false;
            detail = "slot " + std::to_string(record.slot.slot) + " mean delay " +
                     std::to_string(mean) + " ms outside [5, 150]";
            break;
        }
    }

    int mode = 0;
    int mode_count = -1;
    for (const auto& [count, freq] : count_frequency) {
        if (freq > mode_count) {
            mode = count;
            mode_count = freq;
        }
    }
    if (ok && (mode < 2 || mode > 5))
        warn("opt-dsca active-count mode " + std::to_string(mode) +
             " lies outside the reported [2, 5] range (soft target)");

    report(3, "opt-dsca active counts in [1,7], per-slot mean delay in [5,150] ms", ok,
           ok ? "mode " + std::to_string(mode) : detail);
}

void criterion_normalization(const DefaultRuns& runs) {
    const NormalizationBounds& bounds = runs.pipeline.bounds;
    bool ok = normalize(bounds.min_ms, bounds) == 0.0 && normalize(bounds.max_ms, bounds) == 1.0;
    std::string detail = ok ? "" : "endpoint mapping not exact";

    for (const DelayMatrix& matrix : runs.pipeline.matrices) {
        if (!ok) break;
        for (double v : matrix.values_ms) {
            if (!std::isfinite(v)) continue;
            const double normalized = normalize(v, bounds);
            if (!(normalized >= 0.0 && normalized <= 1.0)) {
                ok = false;
                detail = "normalized value " + std::to_string(normalized) + " outside [0, 1]";
                break;
            }
        }
    }
    report(4, "every consumed normalized delay lies in [0, 1] with exact endpoints", ok, detail);
}

// --- criterion 5: constraint suite on randomized desk-scale scenarios

void criterion_constraints() {
    std::mt19937_64 rng(777001);
    bool ok = true;
    std::string detail;

    for (int trial = 0; trial < 100 && ok; ++trial) {
        auto instance = testsupport::random_instance(rng, 8, 5);
        // Sprinkle unreachable entries; keep at least one finite value so the
        // normalization bounds exist.
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (size_t idx = 1; idx < instance.matrix.values_ms.size(); ++idx)
            if (coin(rng) < 0.2) instance.matrix.values_ms[idx] = kUnreachableMs;

        const int m = instance.matrix.num_controllers;
        std::uniform_int_distribution<int> k_dist(1, m);
        std::vector<int> active;
        for (int j = 0; j < k_dist(rng); ++j) active.push_back(j);

        const SolveOutcome outcomes[] = {
            solve_ssca(instance.matrix, instance.bounds, active, instance.weights),
            solve_dsca(instance.matrix, instance.bounds, active, instance.weights),
            solve_opt_dsca(instance.matrix, instance.bounds, instance.weights),
        };
        for (const SolveOutcome& out : outcomes) {
            for (int i = 0; i < instance.matrix.num_satellites && ok; ++i) {
                int row_sum = 0;
                for (int j = 0; j < m; ++j) {
                    row_sum += out.assignment.x(i, j);
                    if (out.assignment.x(i, j) >
                        static_cast<int>(out.activation.active[static_cast<size_t>(j)])) {
                        ok = false;
                        detail = "x exceeds y at trial " + std::to_string(trial);
                    }
                }
                if (row_sum != 1) {
                    ok = false;
                    detail = "row sum " + std::to_string(row_sum) + " at trial " +
                             std::to_string(trial);
                }
            }
            if (ok && out.violations.empty()) {
                for (int i = 0; i < instance.matrix.num_satellites; ++i) {
                    const int j = out.assignment.controller_of[static_cast<size_t>(i)];
                    if (!feasible(instance.matrix.at(i, j), instance.weights)) {
                        ok = false;
                        detail = "delay-bound implication broken at trial " +
                                 std::to_string(trial);
                        break;
                    }
                }
            }
        }
    }
    report(5, "assignment constraints hold on 100 randomized scenarios", ok, detail);
}

// --- criterion 6: shortest-path oracle

void criterion_shortest_path() {
    std::mt19937_64 rng(424243);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 50 && ok; ++trial) {
        const NetworkGraph graph = testsupport::random_dyadic_graph(rng, 30);
        const DelayMatrix matrix = delay_matrix(graph);
        const auto all_pairs = testsupport::floyd_warshall(graph.num_nodes(), graph.edges);
        for (int j = 0; j < graph.num_stations && ok; ++j) {
            const size_t station = static_cast<size_t>(graph.station_node(j));
            for (int i = 0; i < graph.num_satellites; ++i) {
                const double expected = all_pairs[station][static_cast<size_t>(i)];
                const double actual = matrix.at(i, j);
                const bool equal = std::isfinite(expected) ? actual == expected
                                                           : actual == kUnreachableMs;
                if (!equal) {
                    ok = false;
                    detail = "mismatch on graph " + std::to_string(trial);
                    break;
                }
            }
        }
    }
    report(6, "Dijkstra equals Floyd-Warshall exactly on 50 random graphs", ok, detail);
}

// --- criterion 7: orbit checks

void criterion_orbit(const DefaultRuns& runs) {
    const ConstellationConfig& constellation = runs.scenario.constellation;
    const double radius = constellation.semi_major_axis_km();
    bool ok = true;
    std::string detail;

    for (long l = 0; l < runs.scenario.horizon_slots && ok; ++l) {
        const auto states = propagate(constellation, runs.scenario.slot_index(l));
        for (const SatelliteState& s : states) {
            if (std::abs(norm(s.position_km) - radius) > 1e-6) {
                ok = false;
                detail = "radius drift at slot " + std::to_string(l);
                break;
            }
        }
    }

    const double period = constellation.orbital_period_s();
    if (std::abs(period - 6719.0) > 1.0) {
        ok = false;
        detail = "period " + std::to_string(period) + " s not within 1 s of 6719 s";
    }
    report(7, "circular-orbit radius conserved to 1e-6 km; period within 1 s of 6719 s", ok,
           detail);
}

// --- criterion 8: determinism and runtime of the full sweep

bool trees_identical(const fs::path& a, const fs::path& b, std::string& detail) {
    std::vector<fs::path> relative;
    for (const auto& entry : fs::recursive_directory_iterator(a))
        if (entry.is_regular_file()) relative.push_back(fs::relative(entry.path(), a));
    std::sort(relative.begin(), relative.end());

    size_t b_count = 0;
    for (const auto& entry : fs::recursive_directory_iterator(b))
        if (entry.is_regular_file()) ++b_count;
    if (b_count != relative.size()) {
        detail = "file counts differ";
        return false;
    }

    for (const fs::path& rel : relative) {
        std::ifstream fa(a / rel, std::ios::binary);
        std::ifstream fb(b / rel, std::ios::binary);
        if (!fa || !fb) {
            detail = "missing file " + rel.string();
            return false;
        }
        std::ostringstream sa;
        std::ostringstream sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        if (sa.str() != sb.str()) {
            detail = "content differs for " + rel.string();
            return false;
        }
    }
    return true;
}

void criterion_determinism(const fs::path& scenario_path) {
    const auto start = std::chrono::steady_clock::now();
    const fs::path base = fs::temp_directory_path() / "leosdn_acceptance";
    fs::remove_all(base);
    const fs::path out_a = base / "sweep_a";
    const fs::path out_b = base / "sweep_b";

    bool ok = true;
    std::string detail;
    for (const fs::path& out : {out_a, out_b}) {
        const int code = run_cli({"sweep", "--scenario", scenario_path.string(), "--approaches",
                                  "ssca,dsca,opt-dsca", "--k-range", "2..7", "--out",
                                  out.string()});
        if (code != kExitOk) {
            ok = false;
            detail = "sweep exited with code " + std::to_string(code);
        }
    }
    if (ok) ok = trees_identical(out_a, out_b, detail);

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && elapsed >= 300.0) {
        ok = false;
        detail = "two sweeps took " + std::to_string(elapsed) + " s";
    }
    report(8, "full sweep is byte-identical across runs and fast", ok,
           detail.empty() ? std::to_string(elapsed) + " s for two sweeps" : detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <scenario-file>\n";
        return 2;
    }
    const fs::path scenario_path = argv[1];

    criterion_oracle_equivalence();

    const DefaultRuns runs = run_default_scenario(scenario_path);
    criterion_dominance(runs);
    criterion_active_range(runs);
    criterion_normalization(runs);
    criterion_constraints();
    criterion_shortest_path();
    criterion_orbit(runs);
    criterion_determinism(scenario_path);

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
