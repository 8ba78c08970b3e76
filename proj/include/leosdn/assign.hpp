#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leosdn/delay.hpp"

namespace leosdn {

enum class Approach { kSsca, kDsca, kOptDsca };

std::string to_string(Approach approach);
Approach approach_from_string(const std::string& name);  // throws std::invalid_argument

struct ObjectiveWeights {
    double w_delay = 0.75;
    double max_propagation_delay_ms = 150.0;

    void validate() const;  // throws std::invalid_argument
};

struct ObjectiveValue {
    double f1_delay = 0.0;        // weighted normalized mean delay
    double f2_controllers = 0.0;  // weighted active-controller fraction
    double total = 0.0;
    double raw_mean_delay_ms = 0.0;
};

// Binary satellite-to-controller assignment with row sums of exactly 1,
// stored as the assigned controller per satellite.
struct AssignmentMatrix {
    SlotIndex slot;
    int num_controllers = 0;
    std::vector<int> controller_of;

    int num_satellites() const { return static_cast<int>(controller_of.size()); }
    int x(int sat, int controller) const {
        return controller_of[static_cast<size_t>(sat)] == controller ? 1 : 0;
    }
};

struct ActivationVector {
    SlotIndex slot;
    std::vector<std::uint8_t> active;

    int num_controllers() const { return static_cast<int>(active.size()); }
    int active_count() const;
    std::vector<int> active_set() const;  // ascending controller ids
};

ActivationVector make_activation(const SlotIndex& slot, int num_controllers,
                                 const std::vector<int>& active_ids);

struct Violation {
    int sat_id = 0;
    std::string reason;
};

struct SolveOutcome {
    AssignmentMatrix assignment;
    ActivationVector activation;
    ObjectiveValue objective;
    std::vector<double> assigned_delay_ms;  // per satellite, from this slot's matrix
    std::vector<Violation> violations;
};

// Raw delay each satellite sees toward its assigned controller.
std::vector<double> assigned_delays(const AssignmentMatrix& assignment, const DelayMatrix& matrix);

// True iff the delay is finite and at most the configured maximum (inclusive).
bool feasible(double delay_ms, const ObjectiveWeights& weights);

// Static assignment: the per-row optimum on the slot-0 matrix, which the
// caller then freezes and replays for every subsequent slot.
SolveOutcome solve_ssca(const DelayMatrix& first_slot, const NormalizationBounds& bounds,
                        const std::vector<int>& active_set, const ObjectiveWeights& weights);

// Dynamic assignment with a fixed active-controller set: each satellite goes
// to its minimum-delay feasible active controller (ties to the lowest
// controller index). Rows with no feasible active controller fall back to the
// minimum-delay active controller and are recorded as violations.
SolveOutcome solve_dsca(const DelayMatrix& matrix, const NormalizationBounds& bounds,
                        const std::vector<int>& active_set, const ObjectiveWeights& weights);

// Joint assignment and activation: exact optimum over all non-empty
// controller subsets. Zero-violation subsets are preferred outright; ties on
// the objective go to fewer active controllers, then the lexicographically
// smallest subset. Throws std::invalid_argument beyond 20 controllers (the
// exact enumeration guard; no heuristic solver is provided).
SolveOutcome solve_opt_dsca(const DelayMatrix& matrix, const NormalizationBounds& bounds,
                            const ObjectiveWeights& weights);

// Number of satellites whose controller differs between the two assignments.
// Throws std::invalid_argument on dimension mismatch.
int count_reassignments(const AssignmentMatrix& prev, const AssignmentMatrix& cur);

// Objective of a given assignment/activation pair on one slot's matrix:
// f1 = (w/n) * sum of normalized assigned delays, f2 = ((1-w)/m) * sum of y.
// Throws std::invalid_argument if the assignment uses an inactive controller.
ObjectiveValue evaluate_objective(const AssignmentMatrix& assignment,
                                  const ActivationVector& activation, const DelayMatrix& matrix,
                                  const NormalizationBounds& bounds,
                                  const ObjectiveWeights& weights);

}  // namespace leosdn
