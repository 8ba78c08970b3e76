#include "leosdn/orbit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace leosdn {

double ConstellationConfig::mean_motion_rad_s() const {
    const double a = semi_major_axis_km();
    return std::sqrt(kEarthMuKm3PerS2 / (a * a * a));
}

double ConstellationConfig::orbital_period_s() const {
    return 2.0 * std::numbers::pi / mean_motion_rad_s();
}

void ConstellationConfig::validate() const {
    if (num_planes < 1) throw std::invalid_argument("num_planes must be >= 1");
    if (sats_per_plane < 1) throw std::invalid_argument("sats_per_plane must be >= 1");
    if (!(altitude_km > 0.0)) throw std::invalid_argument("altitude_km must be > 0");
    if (!(inclination_deg >= 0.0 && inclination_deg <= 180.0))
        throw std::invalid_argument("inclination_deg must be in [0, 180]");
}

Vec3 satellite_position_inertial(const ConstellationConfig& config, int plane, int slot_in_plane,
                                 double t_s) {
    const double radius = config.semi_major_axis_km();
    const double raan =
        deg_to_rad(static_cast<double>(plane) * config.raan_spread_deg / config.num_planes);
    const double inclination = deg_to_rad(config.inclination_deg);

    // Argument of latitude: even in-plane spacing, Walker phase offset between
    // planes, then the mean motion advances it over time (circular orbit, so
    // the mean anomaly and the true anomaly coincide).
    const double two_pi = 2.0 * std::numbers::pi;
    const double phase0 = two_pi * static_cast<double>(slot_in_plane) / config.sats_per_plane +
                          two_pi * config.inter_plane_phasing * static_cast<double>(plane) /
                              (static_cast<double>(config.num_planes) * config.sats_per_plane);
    const double arg_lat = phase0 + config.mean_motion_rad_s() * t_s;

    const double cos_u = std::cos(arg_lat);
    const double sin_u = std::sin(arg_lat);
    const double cos_raan = std::cos(raan);
    const double sin_raan = std::sin(raan);
    const double cos_inc = std::cos(inclination);
    const double sin_inc = std::sin(inclination);

    return {radius * (cos_u * cos_raan - sin_u * cos_inc * sin_raan),
            radius * (cos_u * sin_raan + sin_u * cos_inc * cos_raan),
            radius * (sin_u * sin_inc)};
}

Vec3 inertial_to_earth_fixed(const Vec3& inertial, double t_s) {
    const double angle = kEarthRotationRadPerS * t_s;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * inertial.x + s * inertial.y, -s * inertial.x + c * inertial.y, inertial.z};
}

std::vector<SatelliteState> propagate(const ConstellationConfig& config, const SlotIndex& slot) {
    config.validate();
    const double t = slot.wall_time_s();

    std::vector<SatelliteState> states;
    states.reserve(static_cast<size_t>(config.total_satellites()));
    for (int p = 0; p < config.num_planes; ++p) {
        for (int k = 0; k < config.sats_per_plane; ++k) {
            SatelliteState state;
            state.sat_id = p * config.sats_per_plane + k;
            state.plane = p;
            state.slot_in_plane = k;
            state.position_km =
                inertial_to_earth_fixed(satellite_position_inertial(config, p, k, t), t);
            states.push_back(state);
        }
    }
    return states;
}

Vec3 station_position(double latitude_deg, double longitude_deg) {
    if (!(latitude_deg >= -90.0 && latitude_deg <= 90.0))
        throw std::invalid_argument("latitude_deg must be in [-90, 90], got " +
                                    std::to_string(latitude_deg));
    if (!(longitude_deg >= -180.0 && longitude_deg <= 180.0))
        throw std::invalid_argument("longitude_deg must be in [-180, 180], got " +
                                    std::to_string(longitude_deg));

    const double lat = deg_to_rad(latitude_deg);
    const double lon = deg_to_rad(longitude_deg);
    return {kEarthRadiusKm * std::cos(lat) * std::cos(lon),
            kEarthRadiusKm * std::cos(lat) * std::sin(lon), kEarthRadiusKm * std::sin(lat)};
}

GroundStation make_ground_station(int gs_id, std::string name, double latitude_deg,
                                  double longitude_deg) {
    GroundStation gs;
    gs.gs_id = gs_id;
    gs.name = std::move(name);
    gs.latitude_deg = latitude_deg;
    gs.longitude_deg = longitude_deg;
    gs.position_km = station_position(latitude_deg, longitude_deg);
    return gs;
}

}  // namespace leosdn
