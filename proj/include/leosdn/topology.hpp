#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "leosdn/orbit.hpp"

namespace leosdn {

// Link-construction knobs. Intra-plane ring links are always on; inter-plane
// links and ground visibility are policy driven.
struct IslPolicy {
    bool inter_plane_enabled = true;
    bool wrap_planes = true;  // planes 0 and num_planes-1 are also adjacent
    std::optional<double> polar_cutoff_deg;  // inter-plane links off above this |latitude|
    double min_elevation_deg = 10.0;

    void validate() const;  // throws std::invalid_argument
};

struct Edge {
    int u = 0;
    int v = 0;  // canonical u < v
    double delay_ms = 0.0;
};

// Per-slot undirected graph over satellite nodes [0, num_satellites) and
// station nodes [num_satellites, num_satellites + num_stations). Edge weights
// are propagation delays in milliseconds.
struct NetworkGraph {
    SlotIndex slot;
    int num_satellites = 0;
    int num_stations = 0;
    std::vector<Edge> edges;

    int num_nodes() const { return num_satellites + num_stations; }
    int station_node(int gs_id) const { return num_satellites + gs_id; }

    // Adjacency list (both directions) for shortest-path runs.
    std::vector<std::vector<std::pair<int, double>>> adjacency() const;
};

// Elevation of the satellite above the station's local horizon plane, in
// degrees; negative when the satellite is below the horizon.
double elevation_deg(const Vec3& station_pos_km, const Vec3& sat_pos_km);

// Straight-line propagation delay in milliseconds.
double propagation_delay_ms(double dist_km);

// Builds the +grid ISL topology plus ground visibility edges:
//  - intra-plane ring (each satellite to its two in-plane neighbors),
//  - inter-plane links between same slot_in_plane in adjacent planes,
//    subject to policy (enabled, wrap, polar cutoff),
//  - satellite-station edge iff elevation >= min_elevation_deg (inclusive).
// Duplicate edges from degenerate rings (sats_per_plane = 2) or plane wrap
// (num_planes = 2) are emitted once.
NetworkGraph build_graph(const std::vector<SatelliteState>& states,
                         const std::vector<GroundStation>& stations, const IslPolicy& policy,
                         const SlotIndex& slot);

}  // namespace leosdn
