#include "bsgate/run_config.h"

#include <cmath>
#include <fstream>
#include <set>

namespace bsgate {

using nlohmann::json;

namespace {

const std::set<std::string> kConfigKeys{"gate",   "matrix",        "angles",        "signs",
                                        "inputs", "superposition", "postselection", "semantics"};

double finite_number(const json &v, const std::string &what) {
    if (!v.is_number()) {
        throw ConfigError(what + " must be a number");
    }
    double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw ConfigError(what + " must be finite");
    }
    return x;
}

std::array<double, kAngleCount> twelve_numbers(const json &v, const std::string &what) {
    if (!v.is_array() || v.size() != kAngleCount) {
        throw ConfigError(what + " must be an array of 12 numbers");
    }
    std::array<double, kAngleCount> out{};
    for (int i = 0; i < kAngleCount; ++i) {
        out[i] = finite_number(v[i], what + "[" + std::to_string(i) + "]");
    }
    return out;
}

}  // namespace

Semantics parse_semantics(const std::string &name) {
    if (name == "occupation") return Semantics::occupation;
    if (name == "bosonic") return Semantics::bosonic;
    if (name == "both") return Semantics::both;
    throw ConfigError("semantics must be occupation, bosonic or both; got '" + name + "'");
}

std::string semantics_name(Semantics semantics) {
    switch (semantics) {
        case Semantics::occupation:
            return "occupation";
        case Semantics::bosonic:
            return "bosonic";
        case Semantics::both:
            return "both";
    }
    return "both";
}

Matrix4 parse_matrix(const json &doc) {
    const json &rows = doc.is_object() && doc.contains("matrix") ? doc.at("matrix") : doc;
    if (!rows.is_array() || rows.size() != 4) {
        throw ConfigError("gate matrix must be 4 rows of 4 numbers");
    }
    Matrix4 m;
    for (int r = 0; r < 4; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 4) {
            throw ConfigError("gate matrix must be 4 rows of 4 numbers");
        }
        for (int c = 0; c < 4; ++c) {
            m(r, c) = finite_number(rows[r][c], "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]");
        }
    }
    return m;
}

json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError("cannot parse " + path.string() + ": " + e.what());
    }
}

RunConfig parse_run_config(const json &doc) {
    if (!doc.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    for (const auto &[key, value] : doc.items()) {
        if (!kConfigKeys.contains(key)) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }

    RunConfig cfg;
    if (!doc.contains("gate") || !doc["gate"].is_string()) {
        throw ConfigError("config needs a \"gate\" string");
    }
    const std::string gate = doc["gate"].get<std::string>();
    if (gate == "cnot") {
        cfg.target = cnot_target();
    } else if (gate == "swap") {
        cfg.target = swap_target();
    } else if (gate == "custom") {
        if (!doc.contains("matrix")) {
            throw ConfigError("custom gate needs a \"matrix\"");
        }
        cfg.target = custom_target(parse_matrix(doc["matrix"]));
    } else {
        throw ConfigError("gate must be cnot, swap or custom; got '" + gate + "'");
    }
    if (gate != "custom" && doc.contains("matrix")) {
        throw ConfigError("\"matrix\" is only allowed with gate custom");
    }

    const bool has_angles = doc.contains("angles");
    const bool has_signs = doc.contains("signs");
    if (has_angles == has_signs) {
        throw ConfigError("config needs exactly one of \"angles\" and \"signs\"");
    }
    if (has_angles) {
        cfg.angles = AngleVector(twelve_numbers(doc["angles"], "angles"));
    } else {
        auto raw = twelve_numbers(doc["signs"], "signs");
        SignAssignment s;
        for (int i = 0; i < kAngleCount; ++i) {
            if (raw[i] != 1.0 && raw[i] != -1.0) {
                throw ConfigError("signs must be +1 or -1");
            }
            s.signs[i] = static_cast<int>(raw[i]);
        }
        cfg.signs = s;
        cfg.angles = s.angles();
    }

    if (doc.contains("inputs")) {
        const json &inputs = doc["inputs"];
        if (!inputs.is_array()) {
            throw ConfigError("inputs must be an array of logical labels");
        }
        for (const auto &label : inputs) {
            if (!label.is_string()) {
                throw ConfigError("inputs must be strings like \"01\"");
            }
            try {
                cfg.inputs.push_back(LogicalState::from_label(label.get<std::string>()));
            } catch (const std::invalid_argument &e) {
                throw ConfigError(e.what());
            }
        }
    } else if (!doc.contains("superposition")) {
        for (auto label : kLogicalLabels) {
            cfg.inputs.push_back(LogicalState::from_label(label));
        }
    }

    if (doc.contains("superposition")) {
        const json &sup = doc["superposition"];
        if (!sup.is_array() || sup.size() != 4) {
            throw ConfigError("superposition must be four [re, im] pairs");
        }
        TwoPhotonInput::Amplitudes amps;
        for (int i = 0; i < 4; ++i) {
            if (!sup[i].is_array() || sup[i].size() != 2) {
                throw ConfigError("superposition must be four [re, im] pairs");
            }
            amps[i] = Amplitude(finite_number(sup[i][0], "superposition re"), finite_number(sup[i][1], "superposition im"));
        }
        try {
            TwoPhotonInput::superposition(amps, kConfigNormTolerance);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        }
        cfg.superposition = amps;
    }

    if (doc.contains("postselection")) {
        const json &ps = doc["postselection"];
        if (!ps.is_object()) {
            throw ConfigError("postselection must be an object");
        }
        for (const auto &[key, value] : ps.items()) {
            if (key != "forbidden_modes" && key != "require_one_per_pair") {
                throw ConfigError("unknown postselection key '" + key + "'");
            }
        }
        if (ps.contains("forbidden_modes")) {
            if (!ps["forbidden_modes"].is_array()) {
                throw ConfigError("forbidden_modes must be an array of mode indices");
            }
            cfg.postselection.forbidden_modes.clear();
            for (const auto &m : ps["forbidden_modes"]) {
                if (!m.is_number_integer() || m.get<int>() < 0 || m.get<int>() >= kModeCount) {
                    throw ConfigError("forbidden_modes entries must be integers in [0,8)");
                }
                cfg.postselection.forbidden_modes.insert(m.get<int>());
            }
        }
        if (ps.contains("require_one_per_pair")) {
            if (!ps["require_one_per_pair"].is_boolean()) {
                throw ConfigError("require_one_per_pair must be a boolean");
            }
            cfg.postselection.require_one_per_pair = ps["require_one_per_pair"].get<bool>();
        }
    }

    if (doc.contains("semantics")) {
        if (!doc["semantics"].is_string()) {
            throw ConfigError("semantics must be a string");
        }
        cfg.semantics = parse_semantics(doc["semantics"].get<std::string>());
    }
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path &path) { return parse_run_config(read_json_file(path)); }

}  // namespace bsgate
