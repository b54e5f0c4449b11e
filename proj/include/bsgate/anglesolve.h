#ifndef BSGATE_ANGLESOLVE_H
#define BSGATE_ANGLESOLVE_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsgate/bsnet.h"
#include "bsgate/occsim.h"

namespace bsgate {

/// Signs of sin(theta_i) for an all-50:50 network: cos(theta_i) = 1/sqrt(2)
/// and sin(theta_i) = sign_i/sqrt(2), i.e. theta_i = sign_i * pi/4.
struct SignAssignment {
    std::array<int, kAngleCount> signs{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};

    /// Assignment number `code` in enumeration order: bit 11 is s1, bit 0 is
    /// s12, and a set bit means -1. Enumeration is therefore lexicographic
    /// with + before -.
    static SignAssignment from_code(unsigned code);
    unsigned code() const;

    int sign(int i) const { return signs.at(i - 1); }
    AngleVector angles() const;
    /// "+-+..." with s1 first.
    std::string label() const;
    void validate() const;

    auto operator<=>(const SignAssignment &) const = default;
};

/// prod_{i in indices} sin(theta_i) == sign * 2^(-half_powers/2).
/// half_powers is 1, 2 or 3, i.e. the constant is +-1/sqrt(2), +-1/2 or +-1/sqrt(8).
struct SignConstraint {
    std::vector<int> indices;
    int sign = 1;
    int half_powers = 1;

    double constant() const;
    std::string describe() const;
};

struct ConditionSet {
    GateKind gate = GateKind::custom;
    std::vector<SignConstraint> constraints;

    void validate() const;
};

/// The sign systems attached to each gate in the 50:50 construction. Note
/// that the system attached to CNOT composes to the SWAP block and the one
/// attached to SWAP composes to the CNOT block; `cross_check_conditions`
/// reports this.
ConditionSet sign_conditions(GateKind gate);

bool check_conditions(const SignAssignment &signs, const ConditionSet &conditions);

/// Every assignment (of 4096) whose composed upper-left block matches `target`
/// to kExactTolerance, in enumeration order.
std::vector<SignAssignment> enumerate_sign_solutions(const GateTarget &target);

/// Every assignment satisfying `conditions`, in enumeration order.
std::vector<SignAssignment> condition_solutions(const ConditionSet &conditions);

struct ConditionCrossCheck {
    std::vector<SignAssignment> enumerated;
    std::vector<SignAssignment> from_conditions;
    std::vector<SignAssignment> only_enumerated;
    std::vector<SignAssignment> only_conditions;
    /// "match", "disjoint", "conditions-subset", "conditions-superset" or "partial-overlap".
    std::string status;
    /// Named gate whose block every condition solution realizes, if any.
    std::optional<GateKind> conditions_realize;
};

ConditionCrossCheck cross_check_conditions(const GateTarget &target, const ConditionSet &conditions);

struct SearchOptions {
    int restarts = 16;
    std::uint64_t seed = 0x5eed5eedULL;
    int max_iterations = 500;
};

struct SearchResult {
    AngleVector angles;
    /// || sqrt(2) * closed_form_block(angles) - target ||_F
    double residual = 0.0;
    bool converged = false;
    /// Best residual found after each restart (non-increasing).
    std::vector<double> best_so_far;
};

/// Multi-start Powell conjugate-direction search on the twelve angles,
/// coordinate step is an exact 1-D minimization (grid bracket + Brent).
/// Throws std::invalid_argument on non-finite targets or tolerance <= 0.
SearchResult continuous_angle_search(const Matrix4 &target, double tolerance, const SearchOptions &options = {});

}  // namespace bsgate

#endif
