#pragma once

#include <string>
#include <vector>

#include "leosdn/geometry.hpp"

namespace leosdn {

// Walker-style constellation: num_planes circular orbital planes, each
// holding sats_per_plane evenly spaced satellites. Plane p gets
// RAAN = p * raan_spread_deg / num_planes; inter_plane_phasing is the
// Walker phase factor F, shifting satellites in plane p by
// 2*pi * F * p / (num_planes * sats_per_plane) along the orbit.
struct ConstellationConfig {
    int num_planes = 6;
    int sats_per_plane = 11;
    double altitude_km = 1325.0;
    double inclination_deg = 98.98;
    double raan_spread_deg = 360.0;
    double inter_plane_phasing = 0.0;
    double epoch_s = 0.0;

    int total_satellites() const { return num_planes * sats_per_plane; }
    double semi_major_axis_km() const { return kEarthRadiusKm + altitude_km; }
    double mean_motion_rad_s() const;
    double orbital_period_s() const;

    // Throws std::invalid_argument on out-of-range fields.
    void validate() const;
};

// Discrete simulation time: wall time advances by slot_duration_s per slot.
struct SlotIndex {
    long slot = 0;
    double slot_duration_s = 10.0;
    double epoch_s = 0.0;

    double wall_time_s() const { return epoch_s + static_cast<double>(slot) * slot_duration_s; }
};

struct SatelliteState {
    int sat_id = 0;
    int plane = 0;
    int slot_in_plane = 0;
    Vec3 position_km;  // Earth-fixed frame
};

struct GroundStation {
    int gs_id = 0;
    std::string name;
    double latitude_deg = 0.0;
    double longitude_deg = 0.0;
    Vec3 position_km;  // Earth-fixed frame, magnitude kEarthRadiusKm
};

// Inertial-frame position of one satellite at absolute time t_s.
Vec3 satellite_position_inertial(const ConstellationConfig& config, int plane, int slot_in_plane,
                                 double t_s);

// Rotates an inertial position into the Earth-fixed frame at time t_s.
Vec3 inertial_to_earth_fixed(const Vec3& inertial, double t_s);

// Earth-fixed positions of the whole constellation at the given slot.
// Satellite ids are plane-major: sat_id = plane * sats_per_plane + slot_in_plane.
std::vector<SatelliteState> propagate(const ConstellationConfig& config, const SlotIndex& slot);

// Earth-fixed coordinates of a sea-level station on the spherical Earth.
// Throws std::invalid_argument for latitude outside [-90, 90] or longitude
// outside [-180, 180].
Vec3 station_position(double latitude_deg, double longitude_deg);

GroundStation make_ground_station(int gs_id, std::string name, double latitude_deg,
                                  double longitude_deg);

}  // namespace leosdn
