#ifndef BSGATE_OCCSIM_H
#define BSGATE_OCCSIM_H

#include <array>
#include <compare>
#include <string>
#include <string_view>

#include "bsgate/bsnet.h"

namespace bsgate {

/// Two-qubit basis state |control target>.
struct LogicalState {
    int control = 0;
    int target = 0;

    LogicalState() = default;
    LogicalState(int control_bit, int target_bit);

    /// "00", "01", "10" or "11".
    std::string label() const;
    static LogicalState from_label(std::string_view label);
    /// Basis index 2*control + target.
    int index() const { return 2 * control + target; }

    auto operator<=>(const LogicalState &) const = default;
};

inline constexpr std::array<std::string_view, 4> kLogicalLabels{"00", "01", "10", "11"};

/// Signed dual-rail occupation vector over modes 0..3.
///
/// Exactly one nonzero entry in {0,1} and one in {2,3}; the signs carry the
/// relative phase.
class OccupationVector {
   public:
    explicit OccupationVector(const std::array<int, 4> &entries);

    int operator[](int i) const { return entries_[i]; }
    const std::array<int, 4> &entries() const { return entries_; }
    Eigen::Vector4d as_vector() const;

    bool operator==(const OccupationVector &) const = default;

   private:
    std::array<int, 4> entries_;
};

enum class GateKind { cnot, swap, custom };

std::string_view gate_name(GateKind kind);

/// A 4x4 real matrix acting on occupation vectors.
struct GateTarget {
    GateKind kind = GateKind::custom;
    Matrix4 matrix = Matrix4::Zero();
};

/// 1/2 [[1,-1,1,1],[-1,1,1,1],[-1,1,-1,1],[1,-1,-1,1]]
GateTarget cnot_target();
/// 1/2 [[1,-1,1,1],[-1,1,1,1],[1,-1,1,1],[-1,1,1,1]]
GateTarget swap_target();
/// Throws std::invalid_argument on non-finite entries.
GateTarget custom_target(const Matrix4 &matrix);
GateTarget target_for(GateKind kind);

OccupationVector encode_logical(const LogicalState &state);

/// matrix * v, required to land back in the occupation basis.
/// Throws NotRepresentable otherwise.
OccupationVector apply_occupation(const Matrix4 &matrix, const OccupationVector &v);
OccupationVector apply_occupation(const GateTarget &target, const OccupationVector &v);

struct DecodedOccupation {
    LogicalState state;
    int sign = 1;
};

DecodedOccupation decode_occupation(const OccupationVector &v);

/// Truth-table CNOT (target ^= control) or SWAP. Custom gates have no
/// reference and throw std::invalid_argument.
LogicalState reference_gate(const LogicalState &state, GateKind gate);

/// max |sqrt(2) * block - target.matrix|. A value below kExactTolerance is a match.
double block_matches_target(const Matrix4 &block, const GateTarget &target);

}  // namespace bsgate

#endif
