#include "leosdn/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace leosdn {

DelayPipeline compute_delays(const ScenarioConfig& scenario) {
    scenario.validate();

    DelayPipeline pipeline;
    pipeline.matrices.reserve(static_cast<size_t>(scenario.horizon_slots));
    for (long l = 0; l < scenario.horizon_slots; ++l) {
        const SlotIndex slot = scenario.slot_index(l);
        const std::vector<SatelliteState> states = propagate(scenario.constellation, slot);
        const NetworkGraph graph =
            build_graph(states, scenario.ground_stations, scenario.isl_policy, slot);
        pipeline.matrices.push_back(delay_matrix(graph));
    }
    pipeline.bounds = normalization_bounds(pipeline.matrices);
    return pipeline;
}

std::vector<int> prefix_active_set(int k) {
    std::vector<int> ids(static_cast<size_t>(k));
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

namespace {

// Replays a frozen slot-0 assignment on a later slot's matrix. Rows whose
// frozen controller is no longer feasible become violations.
SolveOutcome replay_frozen(const SolveOutcome& frozen, const DelayMatrix& matrix,
                           const NormalizationBounds& bounds, const ObjectiveWeights& weights) {
    SolveOutcome outcome;
    outcome.assignment = frozen.assignment;
    outcome.assignment.slot = matrix.slot;
    outcome.activation = frozen.activation;
    outcome.activation.slot = matrix.slot;
    outcome.objective =
        evaluate_objective(outcome.assignment, outcome.activation, matrix, bounds, weights);
    outcome.assigned_delay_ms = assigned_delays(outcome.assignment, matrix);
    for (int i = 0; i < matrix.num_satellites; ++i) {
        if (!feasible(outcome.assigned_delay_ms[static_cast<size_t>(i)], weights))
            outcome.violations.push_back({i, "frozen assignment infeasible at this slot"});
    }
    return outcome;
}

}  // namespace

ScenarioResult run_approach(const DelayPipeline& pipeline, const ScenarioConfig& scenario,
                            Approach approach, int k) {
    if (pipeline.matrices.empty()) throw std::invalid_argument("empty delay pipeline");

    ScenarioResult result;
    result.approach = approach;
    result.config_digest = scenario.digest();
    result.per_slot.reserve(pipeline.matrices.size());

    const std::vector<int> active_ids = prefix_active_set(k);

    SolveOutcome frozen;  // ssca only
    for (size_t idx = 0; idx < pipeline.matrices.size(); ++idx) {
        const DelayMatrix& matrix = pipeline.matrices[idx];

        SlotRecord record;
        record.slot = matrix.slot;
        switch (approach) {
            case Approach::kSsca:
                if (idx == 0) {
                    frozen = solve_ssca(matrix, pipeline.bounds, active_ids, scenario.weights);
                    record.outcome = frozen;
                } else {
                    record.outcome =
                        replay_frozen(frozen, matrix, pipeline.bounds, scenario.weights);
                }
                break;
            case Approach::kDsca:
                record.outcome = solve_dsca(matrix, pipeline.bounds, active_ids, scenario.weights);
                break;
            case Approach::kOptDsca:
                record.outcome = solve_opt_dsca(matrix, pipeline.bounds, scenario.weights);
                break;
        }
        record.reassignment_count =
            idx == 0 ? 0
                     : count_reassignments(result.per_slot.back().outcome.assignment,
                                           record.outcome.assignment);
        result.per_slot.push_back(std::move(record));
    }
    return result;
}

namespace {

std::string fmt(double v) {
    if (!std::isfinite(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string join_ids(const std::vector<int>& ids) {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(ids[i]);
    }
    return out;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file " + path.string());
    return out;
}

}  // namespace

void write_cdf_csv(const std::filesystem::path& path, const CdfSeries& series) {
    std::ofstream out = open_out(path);
    out << "delay_ms,cum_fraction\n";
    for (size_t i = 0; i < series.values_ms.size(); ++i)
        out << fmt(series.values_ms[i]) << ',' << fmt(series.cumulative_fraction[i]) << '\n';
}

void write_timeline_csv(const std::filesystem::path& path,
                        const std::vector<TimelinePoint>& points) {
    std::ofstream out = open_out(path);
    out << "slot,mean_delay_ms,active_count,active_set\n";
    for (const TimelinePoint& p : points)
        out << p.slot << ',' << fmt(p.mean_delay_ms) << ',' << p.active_count << ','
            << join_ids(p.active_set) << '\n';
}

void write_reassignments_csv(const std::filesystem::path& path,
                             const std::vector<ReassignmentPoint>& points) {
    std::ofstream out = open_out(path);
    out << "slot,count,active_set_changed_to\n";
    for (const ReassignmentPoint& p : points)
        out << p.slot << ',' << p.count << ','
            << (p.active_set_changed_to ? join_ids(*p.active_set_changed_to) : std::string())
            << '\n';
}

void write_matrix_dumps(const std::filesystem::path& dir,
                        const std::vector<DelayMatrix>& matrices) {
    std::filesystem::create_directories(dir);
    for (const DelayMatrix& matrix : matrices) {
        std::ofstream out =
            open_out(dir / ("delay_matrix_slot" + std::to_string(matrix.slot.slot) + ".csv"));
        write_delay_matrix_csv(out, matrix);
    }
}

}  // namespace leosdn
