#include "leosdn/topology.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace leosdn {

void IslPolicy::validate() const {
    if (!(min_elevation_deg >= 0.0 && min_elevation_deg < 90.0))
        throw std::invalid_argument("min_elevation_deg must be in [0, 90)");
    if (polar_cutoff_deg && !(*polar_cutoff_deg > 0.0 && *polar_cutoff_deg <= 90.0))
        throw std::invalid_argument("polar_cutoff_deg must be in (0, 90]");
}

std::vector<std::vector<std::pair<int, double>>> NetworkGraph::adjacency() const {
    std::vector<std::vector<std::pair<int, double>>> adj(static_cast<size_t>(num_nodes()));
    for (const Edge& e : edges) {
        adj[static_cast<size_t>(e.u)].emplace_back(e.v, e.delay_ms);
        adj[static_cast<size_t>(e.v)].emplace_back(e.u, e.delay_ms);
    }
    return adj;
}

double elevation_deg(const Vec3& station_pos_km, const Vec3& sat_pos_km) {
    const double station_radius = norm(station_pos_km);
    if (!(station_radius > 0.0)) throw std::invalid_argument("station position must be nonzero");

    const Vec3 line_of_sight = sat_pos_km - station_pos_km;
    const double range = norm(line_of_sight);
    if (!(range > 0.0)) return 90.0;  // coincident points: treat as zenith

    const double sin_elev = dot(station_pos_km, line_of_sight) / (station_radius * range);
    return rad_to_deg(std::asin(std::clamp(sin_elev, -1.0, 1.0)));
}

double propagation_delay_ms(double dist_km) { return dist_km / kSpeedOfLightKmPerS * 1000.0; }

namespace {

double latitude_deg_of(const Vec3& pos) {
    const double r = norm(pos);
    return rad_to_deg(std::asin(std::clamp(pos.z / r, -1.0, 1.0)));
}

}  // namespace

NetworkGraph build_graph(const std::vector<SatelliteState>& states,
                         const std::vector<GroundStation>& stations, const IslPolicy& policy,
                         const SlotIndex& slot) {
    policy.validate();

    int num_planes = 0;
    int sats_per_plane = 0;
    for (const SatelliteState& s : states) {
        num_planes = std::max(num_planes, s.plane + 1);
        sats_per_plane = std::max(sats_per_plane, s.slot_in_plane + 1);
    }
    if (static_cast<size_t>(num_planes) * static_cast<size_t>(sats_per_plane) != states.size())
        throw std::invalid_argument("satellite states do not form a full plane grid");
    for (size_t j = 0; j < stations.size(); ++j) {
        if (stations[j].gs_id != static_cast<int>(j))
            throw std::invalid_argument("ground station ids must match their list order");
    }

    NetworkGraph graph;
    graph.slot = slot;
    graph.num_satellites = static_cast<int>(states.size());
    graph.num_stations = static_cast<int>(stations.size());

    const auto sat_at = [&](int plane, int k) -> const SatelliteState& {
        return states[static_cast<size_t>(plane) * sats_per_plane + k];
    };

    std::set<std::pair<int, int>> seen;
    const auto add_edge = [&](int u, int v, double delay) {
        if (u == v) return;
        if (u > v) std::swap(u, v);
        if (!seen.emplace(u, v).second) return;
        graph.edges.push_back({u, v, delay});
    };

    // Intra-plane rings.
    for (int p = 0; p < num_planes; ++p) {
        for (int k = 0; k < sats_per_plane; ++k) {
            const SatelliteState& a = sat_at(p, k);
            const SatelliteState& b = sat_at(p, (k + 1) % sats_per_plane);
            add_edge(a.sat_id, b.sat_id,
                     propagation_delay_ms(distance_km(a.position_km, b.position_km)));
        }
    }

    // Inter-plane links between same slot_in_plane in adjacent planes.
    if (policy.inter_plane_enabled && num_planes >= 2) {
        const int last_pair = policy.wrap_planes ? num_planes : num_planes - 1;
        for (int p = 0; p < last_pair; ++p) {
            const int q = (p + 1) % num_planes;
            for (int k = 0; k < sats_per_plane; ++k) {
                const SatelliteState& a = sat_at(p, k);
                const SatelliteState& b = sat_at(q, k);
                if (policy.polar_cutoff_deg &&
                    (std::abs(latitude_deg_of(a.position_km)) > *policy.polar_cutoff_deg ||
                     std::abs(latitude_deg_of(b.position_km)) > *policy.polar_cutoff_deg))
                    continue;
                add_edge(a.sat_id, b.sat_id,
                         propagation_delay_ms(distance_km(a.position_km, b.position_km)));
            }
        }
    }

    // Ground visibility edges; the elevation mask boundary is inclusive.
    for (const GroundStation& gs : stations) {
        for (const SatelliteState& s : states) {
            if (elevation_deg(gs.position_km, s.position_km) >= policy.min_elevation_deg) {
                add_edge(s.sat_id, graph.station_node(gs.gs_id),
                         propagation_delay_ms(distance_km(gs.position_km, s.position_km)));
            }
        }
    }

    return graph;
}

}  // namespace leosdn
