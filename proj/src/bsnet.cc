#include "bsgate/bsnet.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bsgate/errors.h"

namespace bsgate {

namespace {

constexpr double kDecomposeTolerance = 1e-9;

// (first line, second line) for theta_1 .. theta_12, stage by stage.
// After stage 2 the lines carry c0 c1 c4 c5 c2 c3 c6 c7 (lines 0..7).
constexpr std::array<std::array<int, 2>, kAngleCount> kStagedWiring{{
    {0, 4}, {1, 5}, {2, 6}, {3, 7},
    {0, 2}, {1, 3}, {4, 6}, {5, 7},
    {0, 1}, {2, 3}, {4, 5}, {6, 7},
}};

// b_k lives on line kStagedRouting[k].
constexpr std::array<int, kModeCount> kStagedRouting{0, 2, 4, 6, 1, 3, 5, 7};

double max_abs(const Matrix4 &m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

AngleVector::AngleVector(std::span<const double> radians) {
    if (radians.size() != kAngleCount) {
        throw std::invalid_argument("AngleVector needs exactly 12 angles, got " + std::to_string(radians.size()));
    }
    for (size_t i = 0; i < radians.size(); ++i) {
        if (!std::isfinite(radians[i])) {
            throw std::invalid_argument("theta_" + std::to_string(i + 1) + " is not finite");
        }
        values_[i] = radians[i];
    }
}

AngleVector::AngleVector(const std::array<double, kAngleCount> &radians)
    : AngleVector(std::span<const double>(radians)) {
}

double AngleVector::theta(int i) const {
    if (i < 1 || i > kAngleCount) {
        throw std::out_of_range("angle index must be in 1..12");
    }
    return values_[i - 1];
}

void BeamSplitterOp::validate() const {
    if (line_a < 0 || line_a >= kModeCount || line_b < 0 || line_b >= kModeCount) {
        throw std::invalid_argument("beam splitter line out of range [0,8)");
    }
    if (line_a == line_b) {
        throw std::invalid_argument("beam splitter must act on two distinct lines");
    }
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("beam splitter angle is not finite");
    }
}

void Network::validate() const {
    for (const auto &op : ops) {
        op.validate();
    }
    auto sorted = output_line;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < kModeCount; ++k) {
        if (sorted[k] != k) {
            throw std::invalid_argument("output routing is not a permutation of the 8 lines");
        }
    }
}

Matrix2 rotation_pair(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("rotation angle is not finite");
    }
    double c = std::cos(theta);
    double s = std::sin(theta);
    Matrix2 r;
    r << c, s, -s, c;
    return r;
}

Network staged_network(const AngleVector &angles) {
    Network net;
    net.ops.reserve(kAngleCount);
    for (int i = 0; i < kAngleCount; ++i) {
        net.ops.push_back(BeamSplitterOp{kStagedWiring[i][0], kStagedWiring[i][1], angles.values()[i], i + 1});
    }
    net.output_line = kStagedRouting;
    return net;
}

Network single_splitter(int line_a, int line_b, double theta) {
    Network net;
    net.ops.push_back(BeamSplitterOp{line_a, line_b, theta, 0});
    net.validate();
    return net;
}

TransferMatrix transfer_matrix(const Network &network) {
    network.validate();
    TransferMatrix lines = TransferMatrix::Identity();
    for (const auto &op : network.ops) {
        Matrix2 r = rotation_pair(op.theta);
        Eigen::Matrix<double, 1, kModeCount> row_a = lines.row(op.line_a);
        Eigen::Matrix<double, 1, kModeCount> row_b = lines.row(op.line_b);
        lines.row(op.line_a) = r(0, 0) * row_a + r(0, 1) * row_b;
        lines.row(op.line_b) = r(1, 0) * row_a + r(1, 1) * row_b;
    }
    TransferMatrix g;
    for (int k = 0; k < kModeCount; ++k) {
        g.row(k) = lines.row(network.output_line[k]);
    }
    return g;
}

Matrix4 closed_form_block(const AngleVector &angles) {
    std::array<double, kAngleCount + 1> c{};
    std::array<double, kAngleCount + 1> s{};
    for (int i = 1; i <= kAngleCount; ++i) {
        c[i] = std::cos(angles.theta(i));
        s[i] = std::sin(angles.theta(i));
    }
    Matrix4 a;
    // b0
    a(0, 0) = c[9] * c[5] * c[1];
    a(0, 1) = s[9] * c[6] * c[2];
    a(0, 2) = c[9] * s[5] * c[3];
    a(0, 3) = s[9] * s[6] * c[4];
    // b1
    a(1, 0) = -s[5] * c[1] * c[10];
    a(1, 1) = -s[6] * c[2] * s[10];
    a(1, 2) = c[5] * c[3] * c[10];
    a(1, 3) = c[6] * c[4] * s[10];
    // b2
    a(2, 0) = -c[7] * s[1] * c[11];
    a(2, 1) = -c[8] * s[2] * s[11];
    a(2, 2) = -s[7] * s[3] * c[11];
    a(2, 3) = -s[8] * s[4] * s[11];
    // b3
    a(3, 0) = s[7] * s[1] * c[12];
    a(3, 1) = s[8] * s[2] * s[12];
    a(3, 2) = -c[7] * s[3] * c[12];
    a(3, 3) = -c[8] * s[4] * s[12];
    return a;
}

double orthogonality_residual(const TransferMatrix &g) {
    return (g * g.transpose() - TransferMatrix::Identity()).cwiseAbs().maxCoeff();
}

double BlockDecomposition::max_residual() const {
    return std::max({upper_rows_residual, lower_rows_residual, upper_lower_residual, lower_upper_residual});
}

BlockDecomposition block_decompose(const TransferMatrix &g) {
    double orth = orthogonality_residual(g);
    if (!(orth < kDecomposeTolerance)) {
        throw ConsistencyError("transfer matrix is not orthogonal (residual " + std::to_string(orth) + ")");
    }
    BlockDecomposition d;
    d.a = g.topLeftCorner<4, 4>();
    d.b = g.topRightCorner<4, 4>();
    d.c = g.bottomLeftCorner<4, 4>();
    d.e = g.bottomRightCorner<4, 4>();
    const Matrix4 id = Matrix4::Identity();
    d.upper_rows_residual = max_abs(d.a * d.a.transpose() + d.b * d.b.transpose() - id);
    d.lower_rows_residual = max_abs(d.c * d.c.transpose() + d.e * d.e.transpose() - id);
    d.upper_lower_residual = max_abs(d.a * d.c.transpose() + d.b * d.e.transpose());
    d.lower_upper_residual = max_abs(d.c * d.a.transpose() + d.e * d.b.transpose());
    return d;
}

}  // namespace bsgate
