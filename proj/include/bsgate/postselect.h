#ifndef BSGATE_POSTSELECT_H
#define BSGATE_POSTSELECT_H

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "bsgate/focksim.h"
#include "bsgate/occsim.h"

namespace bsgate {

/// Which output events are kept. By default any photon in modes 4..7 rejects
/// the event; `require_one_per_pair` additionally keeps only events with one
/// photon in {0,1} and one in {2,3}.
struct PostselectionRule {
    std::set<int> forbidden_modes{4, 5, 6, 7};
    bool require_one_per_pair = false;

    void validate() const;
    bool accepts(const FockConfiguration &config) const;
};

/// Kept mass treated as zero: amplitudes at the 1e-12 noise floor, squared.
inline constexpr double kNegligibleProbability = 1e-24;

struct PostselectionResult {
    /// Renormalized to total probability 1, or empty when the kept mass is
    /// below kNegligibleProbability.
    EventDistribution retained;
    /// Kept probability mass before renormalization.
    double success_probability = 0.0;
};

PostselectionResult apply_postselection(const EventDistribution &dist, const PostselectionRule &rule);

/// One photon in {0,1} and one in {2,3}, decoded as |control target>.
std::optional<LogicalState> decode_coincidence(const FockConfiguration &config);

enum class Semantics { occupation, bosonic, both };

/// Occupation-vector semantics of one logical input: sqrt(2) * A applied to
/// the encoded vector.
struct OccupationOutcome {
    bool representable = false;
    std::array<int, 4> vector{};
    LogicalState outcome;
    int sign = 0;
    /// Set when the image is not an occupation vector.
    std::string error;
};

/// Full bosonic semantics of one logical input after postselection.
struct BosonicOutcome {
    double retained_probability = 0.0;
    /// Probability of each logical outcome conditional on the event being retained.
    std::map<LogicalState, double> conditional;
    /// Retained mass (conditional) on events with two photons in one mode.
    double bunched_fraction = 0.0;
    /// Retained mass (conditional) on unbunched events that are not one-per-pair.
    double cross_pair_fraction = 0.0;
    std::optional<LogicalState> dominant;
    /// Conditional probabilities of every retained configuration, keyed by label.
    std::map<std::string, double> retained_events;
};

struct InputReport {
    LogicalState input;
    std::optional<OccupationOutcome> occupation;
    std::optional<BosonicOutcome> bosonic;
    /// Truth-table outcome of the named gate (CNOT/SWAP only).
    std::optional<LogicalState> reference;
    /// The target matrix's own action on the encoded input, when representable.
    std::optional<OccupationOutcome> target_action;
    /// Every requested semantics lands on `reference` (or on `target_action`
    /// for custom targets).
    bool matches_reference = false;
    /// Every requested semantics lands on `target_action` (with the same sign
    /// under occupation semantics).
    bool matches_target = false;
};

struct GateReport {
    GateKind gate = GateKind::custom;
    Semantics semantics = Semantics::both;
    /// max |sqrt(2) A - target|.
    double block_residual = 0.0;
    std::vector<InputReport> inputs;
    bool truth_table_match = false;
    bool target_match = false;
    /// Mean bosonic retained probability; absent under pure occupation semantics.
    std::optional<double> mean_success_probability;
};

OccupationOutcome occupation_outcome(const Matrix4 &scaled_block, const LogicalState &input);
BosonicOutcome bosonic_outcome(const TransferMatrix &g, const TwoPhotonInput &input, const PostselectionRule &rule);

/// Runs all four logical basis inputs. For CNOT and SWAP the expected outcome
/// is the reference truth table; for custom targets it is the target matrix's
/// own action on the occupation basis. A block that fails to match the target
/// shows up as `matches == false`, never as an exception.
GateReport gate_report(const TransferMatrix &g, const GateTarget &target, const PostselectionRule &rule,
                       Semantics semantics);

}  // namespace bsgate

#endif
