#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leosdn/assign.hpp"

namespace leosdn {

struct SlotRecord {
    SlotIndex slot;
    SolveOutcome outcome;
    int reassignment_count = 0;  // 0 at slot 0 by convention
};

struct ScenarioResult {
    Approach approach = Approach::kSsca;
    std::string config_digest;
    std::vector<SlotRecord> per_slot;  // ordered by slot
};

// Empirical CDF over delay samples. Values are the distinct sample values in
// increasing order; fractions increase strictly and end at exactly 1.0.
struct CdfSeries {
    std::vector<double> values_ms;
    std::vector<double> cumulative_fraction;
};

// Pools every (satellite, slot) assigned raw delay of the run.
std::vector<double> pooled_assigned_delays(const ScenarioResult& result);

// Builds the empirical CDF; non-finite samples are dropped. Throws
// std::invalid_argument when no finite sample remains.
CdfSeries build_cdf(std::vector<double> samples_ms);

struct TimelinePoint {
    long slot = 0;
    double mean_delay_ms = 0.0;
    int active_count = 0;
    std::vector<int> active_set;
    bool activation_changed = false;  // differs from the previous slot; true at slot 0
};

// Per-slot mean assigned raw delay plus the activation snapshot.
std::vector<TimelinePoint> timeline(const ScenarioResult& result);

struct ReassignmentPoint {
    long slot = 0;
    int count = 0;
    // Present only on slots where the active set changed (including slot 0).
    std::optional<std::vector<int>> active_set_changed_to;
};

// Per-slot reassignment counts with activation-change annotations.
std::vector<ReassignmentPoint> reassignment_series(const ScenarioResult& result);

}  // namespace leosdn
