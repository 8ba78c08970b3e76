#include "leosdn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace leosdn {

std::vector<double> pooled_assigned_delays(const ScenarioResult& result) {
    std::vector<double> samples;
    for (const SlotRecord& record : result.per_slot)
        samples.insert(samples.end(), record.outcome.assigned_delay_ms.begin(),
                       record.outcome.assigned_delay_ms.end());
    return samples;
}

CdfSeries build_cdf(std::vector<double> samples_ms) {
    samples_ms.erase(std::remove_if(samples_ms.begin(), samples_ms.end(),
                                    [](double v) { return !std::isfinite(v); }),
                     samples_ms.end());
    if (samples_ms.empty())
        throw std::invalid_argument("cannot build a CDF from an empty sample set");

    std::sort(samples_ms.begin(), samples_ms.end());
    const double total = static_cast<double>(samples_ms.size());

    CdfSeries series;
    size_t i = 0;
    while (i < samples_ms.size()) {
        size_t j = i;
        while (j < samples_ms.size() && samples_ms[j] == samples_ms[i]) ++j;
        series.values_ms.push_back(samples_ms[i]);
        series.cumulative_fraction.push_back(static_cast<double>(j) / total);
        i = j;
    }
    // The last fraction is count/count; force the exact terminal value anyway.
    series.cumulative_fraction.back() = 1.0;
    return series;
}

std::vector<TimelinePoint> timeline(const ScenarioResult& result) {
    std::vector<TimelinePoint> points;
    points.reserve(result.per_slot.size());
    std::vector<int> prev_set;
    for (size_t idx = 0; idx < result.per_slot.size(); ++idx) {
        const SlotRecord& record = result.per_slot[idx];
        TimelinePoint point;
        point.slot = record.slot.slot;
        point.mean_delay_ms = record.outcome.objective.raw_mean_delay_ms;
        point.active_set = record.outcome.activation.active_set();
        point.active_count = static_cast<int>(point.active_set.size());
        point.activation_changed = idx == 0 || point.active_set != prev_set;
        prev_set = point.active_set;
        points.push_back(std::move(point));
    }
    return points;
}

std::vector<ReassignmentPoint> reassignment_series(const ScenarioResult& result) {
    std::vector<ReassignmentPoint> points;
    points.reserve(result.per_slot.size());
    std::vector<int> prev_set;
    for (size_t idx = 0; idx < result.per_slot.size(); ++idx) {
        const SlotRecord& record = result.per_slot[idx];
        ReassignmentPoint point;
        point.slot = record.slot.slot;
        point.count = record.reassignment_count;
        const std::vector<int> active = record.outcome.activation.active_set();
        if (idx == 0 || active != prev_set) point.active_set_changed_to = active;
        prev_set = active;
        points.push_back(std::move(point));
    }
    return points;
}

}  // namespace leosdn
