#ifndef BSGATE_RUN_CONFIG_H
#define BSGATE_RUN_CONFIG_H

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "bsgate/anglesolve.h"
#include "bsgate/focksim.h"
#include "bsgate/postselect.h"

namespace bsgate {

/// Unreadable or malformed input; the CLI maps it to exit status 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kConfigNormTolerance = 1e-9;

struct RunConfig {
    GateTarget target;
    AngleVector angles;
    /// Present when the config used the 50:50 "signs" shorthand.
    std::optional<SignAssignment> signs;
    std::vector<LogicalState> inputs;
    std::optional<TwoPhotonInput::Amplitudes> superposition;
    PostselectionRule postselection;
    Semantics semantics = Semantics::both;
};

/// Config document:
///
///   {
///     "gate": "cnot" | "swap" | "custom",
///     "matrix": [[...4], x4],                      (custom only)
///     "angles": [12 radians]  or  "signs": [12 x +-1],
///     "inputs": ["00", "10", ...],                 (default: all four)
///     "superposition": [[re, im] x4],              (optional, order 00 01 10 11)
///     "postselection": {"forbidden_modes": [...], "require_one_per_pair": false},
///     "semantics": "occupation" | "bosonic" | "both"   (default: both)
///   }
RunConfig parse_run_config(const nlohmann::json &doc);
RunConfig load_run_config(const std::filesystem::path &path);

/// A 4x4 matrix given either bare ([[...], ...]) or as {"matrix": [[...], ...]}.
Matrix4 parse_matrix(const nlohmann::json &doc);
nlohmann::json read_json_file(const std::filesystem::path &path);

Semantics parse_semantics(const std::string &name);
std::string semantics_name(Semantics semantics);

}  // namespace bsgate

#endif
