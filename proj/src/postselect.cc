#include "bsgate/postselect.h"

#include <cmath>
#include <stdexcept>

#include "bsgate/errors.h"

namespace bsgate {

void PostselectionRule::validate() const {
    for (int m : forbidden_modes) {
        if (m < 0 || m >= kModeCount) {
            throw std::invalid_argument("forbidden mode out of range [0,8)");
        }
    }
}

bool PostselectionRule::accepts(const FockConfiguration &config) const {
    for (int m : forbidden_modes) {
        if (config.occupations[m] != 0) {
            return false;
        }
    }
    return !require_one_per_pair || decode_coincidence(config).has_value();
}

PostselectionResult apply_postselection(const EventDistribution &dist, const PostselectionRule &rule) {
    rule.validate();
    PostselectionResult result;
    for (const auto &[config, amp] : dist.amplitudes) {
        if (rule.accepts(config)) {
            result.retained.amplitudes.emplace(config, amp);
            result.success_probability += std::norm(amp);
        }
    }
    if (result.success_probability < kNegligibleProbability) {
        result.retained.amplitudes.clear();
        result.success_probability = 0.0;
        return result;
    }
    const double scale = 1.0 / std::sqrt(result.success_probability);
    for (auto &[config, amp] : result.retained.amplitudes) {
        amp *= scale;
    }
    return result;
}

std::optional<LogicalState> decode_coincidence(const FockConfiguration &config) {
    const auto &o = config.occupations;
    if (config.photon_count() != 2 || o[0] + o[1] != 1 || o[2] + o[3] != 1) {
        return std::nullopt;
    }
    return LogicalState(o[0] == 1 ? 0 : 1, o[2] == 1 ? 0 : 1);
}

OccupationOutcome occupation_outcome(const Matrix4 &scaled_block, const LogicalState &input) {
    OccupationOutcome out;
    try {
        OccupationVector image = apply_occupation(scaled_block, encode_logical(input));
        DecodedOccupation decoded = decode_occupation(image);
        out.representable = true;
        out.vector = image.entries();
        out.outcome = decoded.state;
        out.sign = decoded.sign;
    } catch (const NotRepresentable &e) {
        out.error = e.what();
    }
    return out;
}

BosonicOutcome bosonic_outcome(const TransferMatrix &g, const TwoPhotonInput &input, const PostselectionRule &rule) {
    PostselectionResult post = apply_postselection(evolve_two_photon(g, input), rule);
    BosonicOutcome out;
    out.retained_probability = post.success_probability;
    for (const auto &[config, amp] : post.retained.amplitudes) {
        const double p = std::norm(amp);
        out.retained_events[config.label()] = p;
        if (auto logical = decode_coincidence(config)) {
            out.conditional[*logical] += p;
        } else if (config.has_bunching()) {
            out.bunched_fraction += p;
        } else {
            out.cross_pair_fraction += p;
        }
    }
    double best = -1.0;
    bool tied = false;
    for (const auto &[state, p] : out.conditional) {
        if (p > best + kExactTolerance) {
            best = p;
            out.dominant = state;
            tied = false;
        } else if (std::abs(p - best) <= kExactTolerance) {
            tied = true;
        }
    }
    if (tied) {
        out.dominant.reset();
    }
    return out;
}

GateReport gate_report(const TransferMatrix &g, const GateTarget &target, const PostselectionRule &rule,
                       Semantics semantics) {
    rule.validate();
    const BlockDecomposition blocks = block_decompose(g);
    const Matrix4 scaled = std::sqrt(2.0) * blocks.a;
    const bool want_occupation = semantics != Semantics::bosonic;
    const bool want_bosonic = semantics != Semantics::occupation;

    GateReport report;
    report.gate = target.kind;
    report.semantics = semantics;
    report.block_residual = block_matches_target(blocks.a, target);
    report.truth_table_match = true;
    report.target_match = true;
    double success_sum = 0.0;

    for (auto label : kLogicalLabels) {
        InputReport row;
        row.input = LogicalState::from_label(label);
        OccupationOutcome target_action = occupation_outcome(target.matrix, row.input);
        if (target_action.representable) {
            row.target_action = target_action;
        }
        if (target.kind != GateKind::custom) {
            row.reference = reference_gate(row.input, target.kind);
        } else if (row.target_action) {
            row.reference = row.target_action->outcome;
        }

        row.matches_reference = row.reference.has_value();
        row.matches_target = row.target_action.has_value();
        if (want_occupation) {
            row.occupation = occupation_outcome(scaled, row.input);
            const auto &occ = *row.occupation;
            row.matches_reference = row.matches_reference && occ.representable && occ.outcome == *row.reference;
            row.matches_target = row.matches_target && occ.representable &&
                                 occ.outcome == row.target_action->outcome && occ.sign == row.target_action->sign;
        }
        if (want_bosonic) {
            row.bosonic = bosonic_outcome(g, TwoPhotonInput::logical(row.input), rule);
            success_sum += row.bosonic->retained_probability;
            const auto &dominant = row.bosonic->dominant;
            row.matches_reference = row.matches_reference && dominant && *dominant == *row.reference;
            row.matches_target = row.matches_target && dominant && *dominant == row.target_action->outcome;
        }
        report.truth_table_match &= row.matches_reference;
        report.target_match &= row.matches_target;
        report.inputs.push_back(std::move(row));
    }
    if (want_bosonic) {
        report.mean_success_probability = success_sum / 4.0;
    }
    return report;
}

}  // namespace bsgate
