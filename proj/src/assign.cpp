#include "leosdn/assign.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace leosdn {

std::string to_string(Approach approach) {
    switch (approach) {
        case Approach::kSsca: return "ssca";
        case Approach::kDsca: return "dsca";
        case Approach::kOptDsca: return "opt-dsca";
    }
    throw std::invalid_argument("unknown approach");
}

Approach approach_from_string(const std::string& name) {
    if (name == "ssca") return Approach::kSsca;
    if (name == "dsca") return Approach::kDsca;
    if (name == "opt-dsca") return Approach::kOptDsca;
    throw std::invalid_argument("unknown approach '" + name +
                                "' (expected ssca, dsca, or opt-dsca)");
}

void ObjectiveWeights::validate() const {
    if (!(w_delay >= 0.0 && w_delay <= 1.0))
        throw std::invalid_argument("w_delay must be in [0, 1]");
    if (!(max_propagation_delay_ms > 0.0))
        throw std::invalid_argument("max_propagation_delay_ms must be > 0");
}

int ActivationVector::active_count() const {
    return static_cast<int>(std::count(active.begin(), active.end(), std::uint8_t{1}));
}

std::vector<int> ActivationVector::active_set() const {
    std::vector<int> ids;
    for (int j = 0; j < num_controllers(); ++j)
        if (active[static_cast<size_t>(j)]) ids.push_back(j);
    return ids;
}

ActivationVector make_activation(const SlotIndex& slot, int num_controllers,
                                 const std::vector<int>& active_ids) {
    ActivationVector activation;
    activation.slot = slot;
    activation.active.assign(static_cast<size_t>(num_controllers), 0);
    for (int j : active_ids) {
        if (j < 0 || j >= num_controllers)
            throw std::invalid_argument("active controller id out of range");
        activation.active[static_cast<size_t>(j)] = 1;
    }
    return activation;
}

bool feasible(double delay_ms, const ObjectiveWeights& weights) {
    return std::isfinite(delay_ms) && delay_ms <= weights.max_propagation_delay_ms;
}

namespace {

std::vector<int> canonical_active_set(const std::vector<int>& active_set, int num_controllers) {
    if (active_set.empty()) throw std::invalid_argument("active set must be non-empty");
    std::vector<int> ids = active_set;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.front() < 0 || ids.back() >= num_controllers)
        throw std::invalid_argument("active controller id out of range");
    return ids;
}

// Row optimum: minimum-delay feasible active controller, ties to the lowest
// index. Raw-delay argmin equals normalized-delay argmin because the
// normalization is monotone (and all finite delays coincide when it is
// degenerate). When no active controller is feasible, falls back to the
// minimum-delay active controller and reports the violation.
int pick_controller(const DelayMatrix& matrix, int sat, const std::vector<int>& active_ids,
                    const ObjectiveWeights& weights, bool& violated) {
    int best = -1;
    double best_delay = kUnreachableMs;
    for (int j : active_ids) {
        const double d = matrix.at(sat, j);
        if (!feasible(d, weights)) continue;
        if (best < 0 || d < best_delay) {
            best = j;
            best_delay = d;
        }
    }
    if (best >= 0) {
        violated = false;
        return best;
    }

    violated = true;
    best = active_ids.front();
    best_delay = matrix.at(sat, best);
    for (int j : active_ids) {
        const double d = matrix.at(sat, j);
        if (d < best_delay) {
            best = j;
            best_delay = d;
        }
    }
    return best;
}

SolveOutcome solve_rows(const DelayMatrix& matrix, const NormalizationBounds& bounds,
                        const std::vector<int>& active_ids, const ObjectiveWeights& weights) {
    SolveOutcome outcome;
    outcome.assignment.slot = matrix.slot;
    outcome.assignment.num_controllers = matrix.num_controllers;
    outcome.assignment.controller_of.resize(static_cast<size_t>(matrix.num_satellites));
    outcome.activation = make_activation(matrix.slot, matrix.num_controllers, active_ids);

    for (int i = 0; i < matrix.num_satellites; ++i) {
        bool violated = false;
        outcome.assignment.controller_of[static_cast<size_t>(i)] =
            pick_controller(matrix, i, active_ids, weights, violated);
        if (violated)
            outcome.violations.push_back({i, "no feasible active controller"});
    }
    outcome.objective = evaluate_objective(outcome.assignment, outcome.activation, matrix, bounds,
                                           weights);
    outcome.assigned_delay_ms = assigned_delays(outcome.assignment, matrix);
    return outcome;
}

}  // namespace

std::vector<double> assigned_delays(const AssignmentMatrix& assignment,
                                    const DelayMatrix& matrix) {
    if (assignment.num_satellites() != matrix.num_satellites ||
        assignment.num_controllers != matrix.num_controllers)
        throw std::invalid_argument("assignment/matrix dimensions mismatch");
    std::vector<double> delays(static_cast<size_t>(matrix.num_satellites));
    for (int i = 0; i < matrix.num_satellites; ++i)
        delays[static_cast<size_t>(i)] =
            matrix.at(i, assignment.controller_of[static_cast<size_t>(i)]);
    return delays;
}

SolveOutcome solve_ssca(const DelayMatrix& first_slot, const NormalizationBounds& bounds,
                        const std::vector<int>& active_set, const ObjectiveWeights& weights) {
    // Identical to the slot-0 dynamic solve; the caller freezes the result.
    return solve_dsca(first_slot, bounds, active_set, weights);
}

SolveOutcome solve_dsca(const DelayMatrix& matrix, const NormalizationBounds& bounds,
                        const std::vector<int>& active_set, const ObjectiveWeights& weights) {
    weights.validate();
    const std::vector<int> active_ids = canonical_active_set(active_set, matrix.num_controllers);
    return solve_rows(matrix, bounds, active_ids, weights);
}

SolveOutcome solve_opt_dsca(const DelayMatrix& matrix, const NormalizationBounds& bounds,
                            const ObjectiveWeights& weights) {
    weights.validate();
    const int m = matrix.num_controllers;
    if (m < 1) throw std::invalid_argument("at least one controller required");
    if (m > 20)
        throw std::invalid_argument(
            "exact activation enumeration is limited to 20 controllers; reduce the controller "
            "set (no heuristic solver is provided)");

    SolveOutcome best;
    bool have_best = false;
    std::vector<int> best_set;

    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> active_ids;
        for (int j = 0; j < m; ++j)
            if (mask & (1u << j)) active_ids.push_back(j);

        SolveOutcome candidate = solve_rows(matrix, bounds, active_ids, weights);

        // Preference order: zero-violation subsets first, then total
        // objective, then fewer active controllers, then lexicographically
        // smallest subset.
        bool better = false;
        if (!have_best) {
            better = true;
        } else {
            const bool cand_clean = candidate.violations.empty();
            const bool best_clean = best.violations.empty();
            if (cand_clean != best_clean) {
                better = cand_clean;
            } else if (candidate.objective.total != best.objective.total) {
                better = candidate.objective.total < best.objective.total;
            } else if (active_ids.size() != best_set.size()) {
                better = active_ids.size() < best_set.size();
            } else {
                better = std::lexicographical_compare(active_ids.begin(), active_ids.end(),
                                                      best_set.begin(), best_set.end());
            }
        }
        if (better) {
            best = std::move(candidate);
            best_set = std::move(active_ids);
            have_best = true;
        }
    }
    return best;
}

int count_reassignments(const AssignmentMatrix& prev, const AssignmentMatrix& cur) {
    if (prev.num_satellites() != cur.num_satellites() ||
        prev.num_controllers != cur.num_controllers)
        throw std::invalid_argument("assignment dimensions mismatch");
    int count = 0;
    for (size_t i = 0; i < prev.controller_of.size(); ++i)
        if (prev.controller_of[i] != cur.controller_of[i]) ++count;
    return count;
}

ObjectiveValue evaluate_objective(const AssignmentMatrix& assignment,
                                  const ActivationVector& activation, const DelayMatrix& matrix,
                                  const NormalizationBounds& bounds,
                                  const ObjectiveWeights& weights) {
    weights.validate();
    const int n = matrix.num_satellites;
    const int m = matrix.num_controllers;
    if (assignment.num_satellites() != n || assignment.num_controllers != m ||
        activation.num_controllers() != m)
        throw std::invalid_argument("assignment/activation dimensions mismatch");

    double normalized_sum = 0.0;
    double raw_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const int j = assignment.controller_of[static_cast<size_t>(i)];
        if (j < 0 || j >= m) throw std::invalid_argument("assignment controller out of range");
        if (!activation.active[static_cast<size_t>(j)])
            throw std::invalid_argument("assignment uses an inactive controller");
        const double d = matrix.at(i, j);
        normalized_sum += std::isfinite(d) ? normalize(d, bounds) : kUnreachableMs;
        raw_sum += d;
    }

    ObjectiveValue value;
    // w_delay = 0 zeroes the delay term even when a fallback row is
    // unreachable (0 * inf would otherwise poison the total with NaN).
    value.f1_delay =
        (n > 0 && weights.w_delay > 0.0) ? weights.w_delay * normalized_sum / n : 0.0;
    value.f2_controllers = (1.0 - weights.w_delay) * activation.active_count() / m;
    value.total = value.f1_delay + value.f2_controllers;
    value.raw_mean_delay_ms = n > 0 ? raw_sum / n : 0.0;
    return value;
}

}  // namespace leosdn
