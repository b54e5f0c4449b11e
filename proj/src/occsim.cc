#include "bsgate/occsim.h"

#include <cmath>
#include <stdexcept>

#include "bsgate/errors.h"

namespace bsgate {

namespace {

void check_bit(int bit) {
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("logical bits must be 0 or 1");
    }
}

std::string format_vector(const Eigen::Vector4d &v) {
    std::string out = "(";
    for (int i = 0; i < 4; ++i) {
        if (i) {
            out += ", ";
        }
        out += std::to_string(v[i]);
    }
    return out + ")";
}

}  // namespace

LogicalState::LogicalState(int control_bit, int target_bit) : control(control_bit), target(target_bit) {
    check_bit(control);
    check_bit(target);
}

std::string LogicalState::label() const {
    return std::string{static_cast<char>('0' + control), static_cast<char>('0' + target)};
}

LogicalState LogicalState::from_label(std::string_view label) {
    if (label.size() != 2 || (label[0] != '0' && label[0] != '1') || (label[1] != '0' && label[1] != '1')) {
        throw std::invalid_argument("logical label must be one of 00, 01, 10, 11; got '" + std::string(label) + "'");
    }
    return LogicalState(label[0] - '0', label[1] - '0');
}

OccupationVector::OccupationVector(const std::array<int, 4> &entries) : entries_(entries) {
    for (int x : entries_) {
        if (x < -1 || x > 1) {
            throw std::invalid_argument("occupation entries must be -1, 0 or +1");
        }
    }
    bool one_in_first_pair = (entries_[0] != 0) != (entries_[1] != 0);
    bool one_in_second_pair = (entries_[2] != 0) != (entries_[3] != 0);
    if (!one_in_first_pair || !one_in_second_pair) {
        throw std::invalid_argument("occupation vector needs exactly one photon in modes {0,1} and one in {2,3}");
    }
}

Eigen::Vector4d OccupationVector::as_vector() const {
    return Eigen::Vector4d(entries_[0], entries_[1], entries_[2], entries_[3]);
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::cnot:
            return "cnot";
        case GateKind::swap:
            return "swap";
        case GateKind::custom:
            return "custom";
    }
    return "custom";
}

GateTarget cnot_target() {
    Matrix4 m;
    m << 1, -1, 1, 1,
        -1, 1, 1, 1,
        -1, 1, -1, 1,
        1, -1, -1, 1;
    return GateTarget{GateKind::cnot, m / 2.0};
}

GateTarget swap_target() {
    Matrix4 m;
    m << 1, -1, 1, 1,
        -1, 1, 1, 1,
        1, -1, 1, 1,
        -1, 1, 1, 1;
    return GateTarget{GateKind::swap, m / 2.0};
}

GateTarget custom_target(const Matrix4 &matrix) {
    if (!matrix.allFinite()) {
        throw std::invalid_argument("custom target has non-finite entries");
    }
    return GateTarget{GateKind::custom, matrix};
}

GateTarget target_for(GateKind kind) {
    switch (kind) {
        case GateKind::cnot:
            return cnot_target();
        case GateKind::swap:
            return swap_target();
        case GateKind::custom:
            break;
    }
    throw std::invalid_argument("custom gates need an explicit matrix");
}

OccupationVector encode_logical(const LogicalState &state) {
    std::array<int, 4> e{0, 0, 0, 0};
    e[state.control] = 1;
    e[2 + state.target] = 1;
    return OccupationVector(e);
}

OccupationVector apply_occupation(const Matrix4 &matrix, const OccupationVector &v) {
    Eigen::Vector4d out = matrix * v.as_vector();
    std::array<int, 4> rounded{};
    for (int i = 0; i < 4; ++i) {
        double r = std::round(out[i]);
        if (std::abs(out[i] - r) > kExactTolerance || std::abs(r) > 1) {
            throw NotRepresentable("image " + format_vector(out) + " is not a signed occupation vector");
        }
        rounded[i] = static_cast<int>(r);
    }
    try {
        return OccupationVector(rounded);
    } catch (const std::invalid_argument &) {
        throw NotRepresentable("image " + format_vector(out) + " does not hold one photon per pair");
    }
}

OccupationVector apply_occupation(const GateTarget &target, const OccupationVector &v) {
    return apply_occupation(target.matrix, v);
}

DecodedOccupation decode_occupation(const OccupationVector &v) {
    int control = v[0] != 0 ? 0 : 1;
    int target = v[2] != 0 ? 0 : 1;
    return DecodedOccupation{LogicalState(control, target), v[control] * v[2 + target]};
}

LogicalState reference_gate(const LogicalState &state, GateKind gate) {
    switch (gate) {
        case GateKind::cnot:
            return LogicalState(state.control, state.target ^ state.control);
        case GateKind::swap:
            return LogicalState(state.target, state.control);
        case GateKind::custom:
            break;
    }
    throw std::invalid_argument("custom gates have no reference truth table");
}

double block_matches_target(const Matrix4 &block, const GateTarget &target) {
    return (std::sqrt(2.0) * block - target.matrix).cwiseAbs().maxCoeff();
}

}  // namespace bsgate
