#include "leosdn/delay.hpp"

#include <cmath>
#include <cstdio>
#include <queue>

namespace leosdn {

namespace {

// Single-source shortest paths; returns distances to every node.
std::vector<double> dijkstra(const std::vector<std::vector<std::pair<int, double>>>& adj,
                             int source) {
    std::vector<double> dist(adj.size(), kUnreachableMs);
    using Item = std::pair<double, int>;  // (distance, node)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[static_cast<size_t>(source)] = 0.0;
    queue.emplace(0.0, source);

    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d > dist[static_cast<size_t>(u)]) continue;
        for (const auto& [v, w] : adj[static_cast<size_t>(u)]) {
            const double candidate = d + w;
            if (candidate < dist[static_cast<size_t>(v)]) {
                dist[static_cast<size_t>(v)] = candidate;
                queue.emplace(candidate, v);
            }
        }
    }
    return dist;
}

}  // namespace

DelayMatrix delay_matrix(const NetworkGraph& graph) {
    DelayMatrix matrix;
    matrix.slot = graph.slot;
    matrix.num_satellites = graph.num_satellites;
    matrix.num_controllers = graph.num_stations;
    matrix.values_ms.assign(
        static_cast<size_t>(graph.num_satellites) * static_cast<size_t>(graph.num_stations),
        kUnreachableMs);

    const auto adj = graph.adjacency();
    for (int j = 0; j < graph.num_stations; ++j) {
        const std::vector<double> dist = dijkstra(adj, graph.station_node(j));
        for (int i = 0; i < graph.num_satellites; ++i)
            matrix.at(i, j) = dist[static_cast<size_t>(i)];
    }
    return matrix;
}

NormalizationBounds normalization_bounds(const std::vector<DelayMatrix>& matrices) {
    bool any_finite = false;
    NormalizationBounds bounds{kUnreachableMs, -kUnreachableMs};
    for (const DelayMatrix& m : matrices) {
        for (double v : m.values_ms) {
            if (!std::isfinite(v)) continue;
            any_finite = true;
            bounds.min_ms = std::min(bounds.min_ms, v);
            bounds.max_ms = std::max(bounds.max_ms, v);
        }
    }
    if (!any_finite)
        throw InfeasibleScenarioError(
            "no finite satellite-controller delay exists in any time slot");
    return bounds;
}

double normalize(double delay_ms, const NormalizationBounds& bounds) {
    const double range = bounds.max_ms - bounds.min_ms;
    if (range <= 0.0) return 0.0;
    return (delay_ms - bounds.min_ms) / range;
}

void write_delay_matrix_csv(std::ostream& out, const DelayMatrix& matrix) {
    char buf[64];
    for (int i = 0; i < matrix.num_satellites; ++i) {
        for (int j = 0; j < matrix.num_controllers; ++j) {
            if (j > 0) out << ',';
            const double v = matrix.at(i, j);
            if (std::isfinite(v)) {
                std::snprintf(buf, sizeof(buf), "%.9g", v);
                out << buf;
            } else {
                out << "inf";
            }
        }
        out << '\n';
    }
}

}  // namespace leosdn
