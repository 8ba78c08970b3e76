#pragma once

#include <filesystem>

#include "leosdn/metrics.hpp"
#include "leosdn/scenario.hpp"

namespace leosdn {

// Products of the two-pass pipeline: pass 1 computes every slot's delay
// matrix, pass 2 folds the horizon-global normalization bounds. The bounds
// must observe all slots before any solver runs, so the matrices are kept.
struct DelayPipeline {
    std::vector<DelayMatrix> matrices;
    NormalizationBounds bounds;
};

// Propagates the constellation, builds the per-slot graphs, and computes the
// delay matrices and bounds. Throws InfeasibleScenarioError when no finite
// delay exists anywhere in the horizon.
DelayPipeline compute_delays(const ScenarioConfig& scenario);

// Active set for a fixed controller count: the first k stations in the
// scenario's priority order.
std::vector<int> prefix_active_set(int k);

// Solves the whole horizon with one approach. k selects the active set for
// ssca/dsca and is ignored for opt-dsca.
ScenarioResult run_approach(const DelayPipeline& pipeline, const ScenarioConfig& scenario,
                            Approach approach, int k);

// Deterministic CSV writers (fixed headers, '\n' line endings).
void write_cdf_csv(const std::filesystem::path& path, const CdfSeries& series);
void write_timeline_csv(const std::filesystem::path& path,
                        const std::vector<TimelinePoint>& points);
void write_reassignments_csv(const std::filesystem::path& path,
                             const std::vector<ReassignmentPoint>& points);
void write_matrix_dumps(const std::filesystem::path& dir,
                        const std::vector<DelayMatrix>& matrices);

}  // namespace leosdn
