#include <cmath>
#include <random>

#include "doctest.h"

#include "bsgate/anglesolve.h"
#include "bsgate/postselect.h"
#include "oracles.h"

using namespace bsgate;

namespace {

FockConfiguration config(std::initializer_list<int> modes) {
    std::vector<int> m(modes);
    return FockConfiguration::from_modes(m);
}

TransferMatrix realizing(const GateTarget &target) {
    return transfer_matrix(staged_network(enumerate_sign_solutions(target).front().angles()));
}

}  // namespace

TEST_CASE("postselection keeps a fully allowed distribution") {
    EventDistribution d;
    d.amplitudes[config({0, 2})] = 1.0;
    auto r = apply_postselection(d, PostselectionRule{});
    CHECK(r.success_probability == 1.0);
    CHECK(r.retained.probability(config({0, 2})) == 1.0);
}

TEST_CASE("postselection drops forbidden modes and renormalizes") {
    EventDistribution d;
    const double h = 1.0 / std::sqrt(2.0);
    d.amplitudes[config({0, 4})] = h;
    d.amplitudes[config({1, 2})] = -h;
    auto r = apply_postselection(d, PostselectionRule{});
    CHECK(std::abs(r.success_probability - 0.5) < 1e-15);
    REQUIRE(r.retained.amplitudes.size() == 1);
    CHECK(std::abs(r.retained.probability(config({1, 2})) - 1.0) < 1e-15);
    CHECK(r.retained.amplitudes.at(config({1, 2})).real() < 0);
}

TEST_CASE("empty retained set is success zero") {
    EventDistribution d;
    d.amplitudes[config({5, 7})] = 1.0;
    auto r = apply_postselection(d, PostselectionRule{});
    CHECK(r.success_probability == 0.0);
    CHECK(r.retained.empty());
}

TEST_CASE("one-per-pair filter") {
    EventDistribution d;
    d.amplitudes[config({0, 1})] = 0.5;
    d.amplitudes[config({2, 2})] = 0.5;
    d.amplitudes[config({1, 3})] = std::sqrt(0.5);
    PostselectionRule rule;
    rule.require_one_per_pair = true;
    auto r = apply_postselection(d, rule);
    CHECK(std::abs(r.success_probability - 0.5) < 1e-15);
    CHECK(r.retained.amplitudes.size() == 1);

    PostselectionRule bad;
    bad.forbidden_modes = {9};
    CHECK_THROWS_AS(apply_postselection(d, bad), std::invalid_argument);
}

TEST_CASE("decode_coincidence") {
    CHECK(decode_coincidence(config({1, 2})) == LogicalState(1, 0));
    CHECK(decode_coincidence(config({0, 3})) == LogicalState(0, 1));
    CHECK_FALSE(decode_coincidence(config({0, 1})).has_value());
    CHECK_FALSE(decode_coincidence(config({2, 2})).has_value());
    CHECK_FALSE(decode_coincidence(config({0, 4})).has_value());
}

TEST_CASE("postselection is idempotent") {
    std::mt19937_64 rng(53);
    TransferMatrix g = transfer_matrix(staged_network(AngleVector(oracle::random_angles(rng))));
    for (bool per_pair : {false, true}) {
        PostselectionRule rule;
        rule.require_one_per_pair = per_pair;
        auto once = apply_postselection(evolve_two_photon(g, TwoPhotonInput::pair(0, 3)), rule);
        auto twice = apply_postselection(once.retained, rule);
        CHECK(std::abs(twice.success_probability - 1.0) < 1e-12);
        CHECK(max_amplitude_difference(once.retained, twice.retained) < 1e-12);
    }
}

TEST_CASE("success probability is the retained mass before renormalization") {
    std::mt19937_64 rng(59);
    TransferMatrix g = transfer_matrix(staged_network(AngleVector(oracle::random_angles(rng))));
    auto dist = evolve_two_photon(g, TwoPhotonInput::pair(1, 2));
    double kept = 0;
    for (const auto &[c, amp] : dist.amplitudes) {
        if (c.occupations[4] + c.occupations[5] + c.occupations[6] + c.occupations[7] == 0) {
            kept += std::norm(amp);
        }
    }
    auto r = apply_postselection(dist, PostselectionRule{});
    CHECK(r.success_probability == doctest::Approx(kept).epsilon(1e-14));
    CHECK(std::abs(r.retained.total_probability() - 1.0) < 1e-12);
}

TEST_CASE("single photons survive the projection with probability one half") {
    for (const auto &target : {cnot_target(), swap_target()}) {
        TransferMatrix g = realizing(target);
        for (int k = 0; k < 4; ++k) {
            auto r = apply_postselection(evolve(g, FockConfiguration::from_modes(std::vector<int>{k})),
                                         PostselectionRule{});
            CHECK(std::abs(r.success_probability - 0.5) < 1e-12);
        }
    }
}

TEST_CASE("occupation-semantics report on the CNOT network") {
    auto report = gate_report(realizing(cnot_target()), cnot_target(), PostselectionRule{}, Semantics::occupation);
    CHECK(report.truth_table_match);
    CHECK(report.target_match);
    CHECK(report.block_residual < kExactTolerance);
    CHECK_FALSE(report.mean_success_probability.has_value());
    const std::array<int, 4> signs{-1, 1, -1, 1};
    for (int i = 0; i < 4; ++i) {
        const auto &row = report.inputs[i];
        REQUIRE(row.occupation);
        CHECK(row.occupation->representable);
        CHECK(row.occupation->outcome == reference_gate(row.input, GateKind::cnot));
        CHECK(row.occupation->sign == signs[i]);
        CHECK_FALSE(row.bosonic.has_value());
    }
}

TEST_CASE("occupation-semantics report on the SWAP network follows the target matrix") {
    auto report = gate_report(realizing(swap_target()), swap_target(), PostselectionRule{}, Semantics::occupation);
    CHECK(report.target_match);
    CHECK_FALSE(report.truth_table_match);
    for (const auto &row : report.inputs) {
        CHECK(row.occupation->sign == 1);
        CHECK(row.matches_target);
    }
    CHECK(report.inputs[0].matches_reference);
    CHECK_FALSE(report.inputs[1].matches_reference);
    CHECK_FALSE(report.inputs[2].matches_reference);
    CHECK(report.inputs[3].matches_reference);
}

TEST_CASE("mismatched block is reported, not thrown") {
    std::array<double, 12> zeros{};
    TransferMatrix g = transfer_matrix(staged_network(AngleVector(zeros)));
    auto report = gate_report(g, cnot_target(), PostselectionRule{}, Semantics::both);
    CHECK(report.block_residual >= 0.5);
    CHECK_FALSE(report.truth_table_match);
    for (const auto &row : report.inputs) {
        CHECK_FALSE(row.occupation->representable);
        CHECK_FALSE(row.occupation->error.empty());
    }
}

TEST_CASE("bosonic report on the gate networks") {
    for (const auto &target : {cnot_target(), swap_target()}) {
        auto report = gate_report(realizing(target), target, PostselectionRule{}, Semantics::bosonic);
        REQUIRE(report.mean_success_probability);
        CHECK(std::abs(*report.mean_success_probability - 0.25) < 1e-12);
        for (const auto &row : report.inputs) {
            REQUIRE(row.bosonic);
            const auto &b = *row.bosonic;
            CHECK(std::abs(b.retained_probability - 0.25) < 1e-12);
            double total = b.bunched_fraction + b.cross_pair_fraction;
            for (const auto &[state, p] : b.conditional) {
                total += p;
            }
            CHECK(std::abs(total - 1.0) < 1e-12);
            CHECK(b.bunched_fraction > 0.0);
        }
    }
}

TEST_CASE("one-per-pair rule normalizes the logical conditionals") {
    PostselectionRule rule;
    rule.require_one_per_pair = true;
    auto report = gate_report(realizing(cnot_target()), cnot_target(), rule, Semantics::bosonic);
    for (const auto &row : report.inputs) {
        double total = 0;
        for (const auto &[state, p] : row.bosonic->conditional) {
            total += p;
        }
        CHECK(std::abs(total - 1.0) < 1e-12);
        CHECK(row.bosonic->bunched_fraction == 0.0);
        CHECK(row.bosonic->retained_probability < 0.25);
    }
}

TEST_CASE("custom target uses its own action as reference") {
    auto target = custom_target(cnot_target().matrix);
    auto report = gate_report(realizing(cnot_target()), target, PostselectionRule{}, Semantics::occupation);
    CHECK(report.truth_table_match);
    CHECK(report.target_match);
}

TEST_CASE("cancelled retained mass is reported as zero, not renormalized noise") {
    SignAssignment s;
    s.signs = {1, 1, 1, 1, 1, -1, 1, 1, -1, 1, -1, -1};
    TransferMatrix g = transfer_matrix(staged_network(s.angles()));
    const double h = 1.0 / std::sqrt(2.0);
    auto input = TwoPhotonInput::superposition({Amplitude(h), 0.0, Amplitude(h), 0.0});
    auto result = apply_postselection(evolve_two_photon(g, input), PostselectionRule{});
    CHECK(result.success_probability == 0.0);
    CHECK(result.retained.empty());
    BosonicOutcome b = bosonic_outcome(g, input, PostselectionRule{});
    CHECK(b.conditional.empty());
    CHECK_FALSE(b.dominant);
}
