#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "leosdn/assign.hpp"
#include "leosdn/topology.hpp"

namespace leosdn {

// Malformed or semantically invalid scenario configuration. line is 0 when
// the problem is not tied to a specific line.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string source, int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_ = 0;
};

struct ScenarioConfig {
    ConstellationConfig constellation;
    std::vector<GroundStation> ground_stations;  // priority (population) order
    IslPolicy isl_policy;
    ObjectiveWeights weights;
    long horizon_slots = 360;
    double slot_duration_s = 10.0;
    std::vector<Approach> approaches = {Approach::kSsca, Approach::kDsca, Approach::kOptDsca};
    std::vector<int> k_values;  // controller counts for sweeps

    int num_stations() const { return static_cast<int>(ground_stations.size()); }
    SlotIndex slot_index(long slot) const;

    // Throws ConfigError on violated invariants (empty station list,
    // k values out of range, bad weights, ...).
    void validate() const;

    // Canonical serialization; independent of comments/whitespace in the
    // source file. Used for the digest and for digest stability tests.
    std::string canonical_string() const;

    // FNV-1a 64-bit hash of canonical_string(), as 16 hex digits.
    std::string digest() const;
};

// Parses the scenario text format: `key = value` lines with dotted section
// prefixes, `station = name, lat_deg, lon_deg` entries, and `#` comments.
// Throws ConfigError with the offending line number on malformed input.
ScenarioConfig parse_scenario(std::istream& in, const std::string& source_name);

ScenarioConfig load_scenario(const std::filesystem::path& path);

}  // namespace leosdn
