#pragma once

#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "leosdn/topology.hpp"

namespace leosdn {

// No finite satellite-to-controller delay exists anywhere in the horizon.
class InfeasibleScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kUnreachableMs = std::numeric_limits<double>::infinity();

// Per-slot shortest propagation delay from every satellite to every
// controller's ground station, in milliseconds. Unreachable pairs hold
// kUnreachableMs.
struct DelayMatrix {
    SlotIndex slot;
    int num_satellites = 0;
    int num_controllers = 0;
    std::vector<double> values_ms;  // row-major [sat][controller]

    double at(int sat, int controller) const {
        return values_ms[static_cast<size_t>(sat) * num_controllers + controller];
    }
    double& at(int sat, int controller) {
        return values_ms[static_cast<size_t>(sat) * num_controllers + controller];
    }
};

// Horizon-global min/max over all finite delay entries.
struct NormalizationBounds {
    double min_ms = 0.0;
    double max_ms = 0.0;
};

// One Dijkstra run per controller station over the combined satellite+station
// graph; the space-ground leg is part of the path.
DelayMatrix delay_matrix(const NetworkGraph& graph);

// Throws InfeasibleScenarioError when no finite entry exists in any matrix.
NormalizationBounds normalization_bounds(const std::vector<DelayMatrix>& matrices);

// (d - min) / (max - min); 0 when the bounds are degenerate (max == min).
double normalize(double delay_ms, const NormalizationBounds& bounds);

// Debug dump: rows = satellites, columns = controllers, "inf" for unreachable.
void write_delay_matrix_csv(std::ostream& out, const DelayMatrix& matrix);

}  // namespace leosdn
