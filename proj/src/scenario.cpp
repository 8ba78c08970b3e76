#include "leosdn/scenario.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace leosdn {

namespace {

std::string trim(const std::string& s) {
    const size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        const size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(trim(s.substr(start)));
            break;
        }
        parts.push_back(trim(s.substr(start, pos - start)));
        start = pos + 1;
    }
    return parts;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ConfigError::ConfigError(std::string source, int line, const std::string& message)
    : std::runtime_error(line > 0 ? source + ":" + std::to_string(line) + ": " + message
                                  : source + ": " + message),
      line_(line) {}

SlotIndex ScenarioConfig::slot_index(long slot) const {
    return SlotIndex{slot, slot_duration_s, constellation.epoch_s};
}

void ScenarioConfig::validate() const {
    try {
        constellation.validate();
        isl_policy.validate();
        weights.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("scenario", 0, e.what());
    }
    if (ground_stations.empty()) throw ConfigError("scenario", 0, "at least one station required");
    if (horizon_slots < 1) throw ConfigError("scenario", 0, "horizon_slots must be >= 1");
    if (!(slot_duration_s > 0.0)) throw ConfigError("scenario", 0, "slot_duration_s must be > 0");
    if (approaches.empty()) throw ConfigError("scenario", 0, "at least one approach required");
    for (int k : k_values) {
        if (k < 1 || k > num_stations())
            throw ConfigError("scenario", 0,
                              "k value " + std::to_string(k) + " outside [1, " +
                                  std::to_string(num_stations()) + "]");
    }
    for (const GroundStation& gs : ground_stations) {
        if (gs.name.empty()) throw ConfigError("scenario", 0, "station name must be non-empty");
    }
}

std::string ScenarioConfig::canonical_string() const {
    std::ostringstream out;
    out << "constellation.num_planes=" << constellation.num_planes << '\n'
        << "constellation.sats_per_plane=" << constellation.sats_per_plane << '\n'
        << "constellation.altitude_km=" << fmt_double(constellation.altitude_km) << '\n'
        << "constellation.inclination_deg=" << fmt_double(constellation.inclination_deg) << '\n'
        << "constellation.raan_spread_deg=" << fmt_double(constellation.raan_spread_deg) << '\n'
        << "constellation.inter_plane_phasing=" << fmt_double(constellation.inter_plane_phasing)
        << '\n'
        << "constellation.epoch_s=" << fmt_double(constellation.epoch_s) << '\n'
        << "isl.inter_plane_enabled=" << (isl_policy.inter_plane_enabled ? "true" : "false")
        << '\n'
        << "isl.wrap_planes=" << (isl_policy.wrap_planes ? "true" : "false") << '\n'
        << "isl.polar_cutoff_deg="
        << (isl_policy.polar_cutoff_deg ? fmt_double(*isl_policy.polar_cutoff_deg) : "none")
        << '\n'
        << "isl.min_elevation_deg=" << fmt_double(isl_policy.min_elevation_deg) << '\n'
        << "weights.w_delay=" << fmt_double(weights.w_delay) << '\n'
        << "weights.max_propagation_delay_ms=" << fmt_double(weights.max_propagation_delay_ms)
        << '\n'
        << "run.horizon_slots=" << horizon_slots << '\n'
        << "run.slot_duration_s=" << fmt_double(slot_duration_s) << '\n';
    out << "run.approaches=";
    for (size_t i = 0; i < approaches.size(); ++i)
        out << (i ? "," : "") << to_string(approaches[i]);
    out << '\n' << "run.k_values=";
    for (size_t i = 0; i < k_values.size(); ++i) out << (i ? "," : "") << k_values[i];
    out << '\n';
    for (const GroundStation& gs : ground_stations)
        out << "station=" << gs.name << ',' << fmt_double(gs.latitude_deg) << ','
            << fmt_double(gs.longitude_deg) << '\n';
    return out.str();
}

std::string ScenarioConfig::digest() const {
    // FNV-1a, 64-bit
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : canonical_string()) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

namespace {

class Parser {
public:
    Parser(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

    ScenarioConfig run() {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            const size_t comment = raw.find('#');
            if (comment != std::string::npos) raw.erase(comment);
            const std::string line = trim(raw);
            if (line.empty()) continue;

            const size_t eq = line.find('=');
            if (eq == std::string::npos) fail("expected 'key = value'");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty()) fail("empty key");
            if (value.empty()) fail("empty value for key '" + key + "'");
            handle(key, value);
        }
        if (config_.k_values.empty() && !config_.ground_stations.empty()) {
            const int m = config_.num_stations();
            for (int k = (m >= 2 ? 2 : 1); k <= m; ++k) config_.k_values.push_back(k);
        }
        try {
            config_.validate();
        } catch (const ConfigError& e) {
            throw ConfigError(source_, 0, e.what());
        }
        return config_;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ConfigError(source_, line_, message);
    }

    double number(const std::string& value) const {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc{} || ptr != value.data() + value.size())
            fail("expected a number, got '" + value + "'");
        return v;
    }

    long integer(const std::string& value) const {
        long v = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc{} || ptr != value.data() + value.size())
            fail("expected an integer, got '" + value + "'");
        return v;
    }

    bool boolean(const std::string& value) const {
        if (value == "true") return true;
        if (value == "false") return false;
        fail("expected true or false, got '" + value + "'");
    }

    void handle(const std::string& key, const std::string& value) {
        ConstellationConfig& con = config_.constellation;
        IslPolicy& isl = config_.isl_policy;

        if (key == "constellation.num_planes") con.num_planes = static_cast<int>(integer(value));
        else if (key == "constellation.sats_per_plane")
            con.sats_per_plane = static_cast<int>(integer(value));
        else if (key == "constellation.altitude_km") con.altitude_km = number(value);
        else if (key == "constellation.inclination_deg") con.inclination_deg = number(value);
        else if (key == "constellation.raan_spread_deg") con.raan_spread_deg = number(value);
        else if (key == "constellation.inter_plane_phasing")
            con.inter_plane_phasing = number(value);
        else if (key == "constellation.epoch_s") con.epoch_s = number(value);
        else if (key == "isl.inter_plane_enabled") isl.inter_plane_enabled = boolean(value);
        else if (key == "isl.wrap_planes") isl.wrap_planes = boolean(value);
        else if (key == "isl.polar_cutoff_deg") isl.polar_cutoff_deg = number(value);
        else if (key == "isl.min_elevation_deg") isl.min_elevation_deg = number(value);
        else if (key == "weights.w_delay") config_.weights.w_delay = number(value);
        else if (key == "weights.max_propagation_delay_ms")
            config_.weights.max_propagation_delay_ms = number(value);
        else if (key == "run.horizon_slots") config_.horizon_slots = integer(value);
        else if (key == "run.slot_duration_s") config_.slot_duration_s = number(value);
        else if (key == "run.approaches") parse_approaches(value);
        else if (key == "run.k_values") parse_k_values(value);
        else if (key == "station") parse_station(value);
        else fail("unknown key '" + key + "'");
    }

    void parse_approaches(const std::string& value) {
        config_.approaches.clear();
        for (const std::string& part : split(value, ',')) {
            try {
                config_.approaches.push_back(approach_from_string(part));
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
        }
    }

    void parse_k_values(const std::string& value) {
        config_.k_values.clear();
        for (const std::string& part : split(value, ','))
            config_.k_values.push_back(static_cast<int>(integer(part)));
    }

    void parse_station(const std::string& value) {
        const std::vector<std::string> parts = split(value, ',');
        if (parts.size() != 3) fail("station needs 'name, latitude_deg, longitude_deg'");
        if (parts[0].empty()) fail("station name must be non-empty");
        try {
            config_.ground_stations.push_back(
                make_ground_station(static_cast<int>(config_.ground_stations.size()), parts[0],
                                    number(parts[1]), number(parts[2])));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    std::istream& in_;
    std::string source_;
    int line_ = 0;
    ScenarioConfig config_;
};

}  // namespace

ScenarioConfig parse_scenario(std::istream& in, const std::string& source_name) {
    return Parser(in, source_name).run();
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path.string(), 0, "cannot open scenario file");
    return parse_scenario(in, path.filename().string());
}

}  // namespace leosdn
