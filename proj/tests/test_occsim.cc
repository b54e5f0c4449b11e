#include <cmath>

#include "doctest.h"

#include "bsgate/errors.h"
#include "bsgate/occsim.h"

using namespace bsgate;

namespace {

OccupationVector occ(int a, int b, int c, int d) { return OccupationVector({a, b, c, d}); }

}  // namespace

TEST_CASE("encode_logical") {
    CHECK(encode_logical({0, 0}) == occ(1, 0, 1, 0));
    CHECK(encode_logical({0, 1}) == occ(1, 0, 0, 1));
    CHECK(encode_logical({1, 0}) == occ(0, 1, 1, 0));
    CHECK(encode_logical({1, 1}) == occ(0, 1, 0, 1));
}

TEST_CASE("LogicalState and OccupationVector validation") {
    CHECK_THROWS_AS(LogicalState(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(LogicalState::from_label("012"), std::invalid_argument);
    CHECK_THROWS_AS(LogicalState::from_label("0x"), std::invalid_argument);
    CHECK(LogicalState::from_label("10") == LogicalState(1, 0));
    CHECK(LogicalState(1, 0).label() == "10");

    CHECK_THROWS_AS(occ(1, 1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(occ(1, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(occ(2, 0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(occ(0, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("A_CNOT on the occupation basis") {
    auto t = cnot_target();
    CHECK(apply_occupation(t, occ(1, 0, 1, 0)) == occ(1, 0, -1, 0));
    CHECK(apply_occupation(t, occ(1, 0, 0, 1)) == occ(1, 0, 0, 1));
    CHECK(apply_occupation(t, occ(0, 1, 1, 0)) == occ(0, 1, 0, -1));
    CHECK(apply_occupation(t, occ(0, 1, 0, 1)) == occ(0, 1, 1, 0));
}

TEST_CASE("A_SWAP on the occupation basis") {
    auto t = swap_target();
    CHECK(apply_occupation(t, occ(1, 0, 1, 0)) == occ(1, 0, 1, 0));
    CHECK(apply_occupation(t, occ(1, 0, 0, 1)) == occ(1, 0, 1, 0));
    CHECK(apply_occupation(t, occ(0, 1, 1, 0)) == occ(0, 1, 0, 1));
    CHECK(apply_occupation(t, occ(0, 1, 0, 1)) == occ(0, 1, 0, 1));
}

TEST_CASE("apply_occupation rejects images outside the basis") {
    CHECK_THROWS_AS(apply_occupation(Matrix4::Identity() * 0.5, occ(1, 0, 1, 0)), NotRepresentable);
    CHECK_THROWS_AS(apply_occupation(Matrix4::Zero(), occ(1, 0, 1, 0)), NotRepresentable);
    Matrix4 collapse = Matrix4::Zero();
    collapse(0, 0) = 1;
    collapse(1, 2) = 1;  // both photons land in pair {0,1}
    CHECK_THROWS_AS(apply_occupation(collapse, occ(1, 0, 1, 0)), NotRepresentable);
    CHECK(apply_occupation(Matrix4::Identity(), occ(0, -1, 1, 0)) == occ(0, -1, 1, 0));
}

TEST_CASE("decode_occupation") {
    auto a = decode_occupation(occ(1, 0, -1, 0));
    CHECK(a.state == LogicalState(0, 0));
    CHECK(a.sign == -1);
    auto b = decode_occupation(occ(0, 1, 0, -1));
    CHECK(b.state == LogicalState(1, 1));
    CHECK(b.sign == -1);
    auto c = decode_occupation(occ(1, 0, 0, 1));
    CHECK(c.state == LogicalState(0, 1));
    CHECK(c.sign == 1);
    CHECK(decode_occupation(occ(-1, 0, 0, -1)).sign == 1);
}

TEST_CASE("reference_gate") {
    CHECK(reference_gate({1, 0}, GateKind::cnot) == LogicalState(1, 1));
    CHECK(reference_gate({0, 1}, GateKind::cnot) == LogicalState(0, 1));
    CHECK(reference_gate({0, 1}, GateKind::swap) == LogicalState(1, 0));
    CHECK(reference_gate({1, 1}, GateKind::swap) == LogicalState(1, 1));
    CHECK_THROWS_AS(reference_gate({0, 0}, GateKind::custom), std::invalid_argument);
}

TEST_CASE("CNOT occupation semantics reproduce the truth table with phases") {
    const std::array<int, 4> expected_signs{-1, 1, -1, 1};
    for (int i = 0; i < 4; ++i) {
        LogicalState in = LogicalState::from_label(kLogicalLabels[i]);
        auto decoded = decode_occupation(apply_occupation(cnot_target(), encode_logical(in)));
        CHECK(decoded.state == reference_gate(in, GateKind::cnot));
        CHECK(decoded.sign == expected_signs[i]);
    }
}

TEST_CASE("A_SWAP occupation semantics: all signs positive, not a permutation") {
    std::array<LogicalState, 4> outcomes;
    for (int i = 0; i < 4; ++i) {
        LogicalState in = LogicalState::from_label(kLogicalLabels[i]);
        auto decoded = decode_occupation(apply_occupation(swap_target(), encode_logical(in)));
        CHECK(decoded.sign == 1);
        outcomes[i] = decoded.state;
    }
    // |01> and |00> land on the same output, so the map cannot be the SWAP truth table.
    CHECK(outcomes[0] == outcomes[1]);
    CHECK(outcomes[1] != reference_gate(LogicalState(0, 1), GateKind::swap));
}

TEST_CASE("targets are not orthogonal") {
    for (const auto &t : {cnot_target(), swap_target()}) {
        double residual = (t.matrix * t.matrix.transpose() - Matrix4::Identity()).cwiseAbs().maxCoeff();
        CHECK(residual > 0.4);
    }
}

TEST_CASE("encode then decode is the identity on positive vectors") {
    for (auto label : kLogicalLabels) {
        LogicalState s = LogicalState::from_label(label);
        auto d = decode_occupation(encode_logical(s));
        CHECK(d.state == s);
        CHECK(d.sign == 1);
    }
}

TEST_CASE("block_matches_target") {
    CHECK(block_matches_target(cnot_target().matrix / std::sqrt(2.0), cnot_target()) < 1e-15);
    Matrix4 permutation_block;
    permutation_block << 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0;
    CHECK(block_matches_target(permutation_block, cnot_target()) >= 0.5);
    CHECK(block_matches_target(Matrix4::Identity(), cnot_target()) >= 0.5);
    CHECK_THROWS_AS(custom_target(Matrix4::Constant(std::nan(""))), std::invalid_argument);
}
