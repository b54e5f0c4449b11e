#ifndef BSGATE_BSNET_H
#define BSGATE_BSNET_H

#include <array>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace bsgate {

inline constexpr int kModeCount = 8;
inline constexpr int kAngleCount = 12;

/// Absolute tolerance used for every exact-algebra check in the library.
inline constexpr double kExactTolerance = 1e-12;

using Matrix2 = Eigen::Matrix2d;
using Matrix4 = Eigen::Matrix4d;
using TransferMatrix = Eigen::Matrix<double, kModeCount, kModeCount>;

/// The twelve beam-splitter angles of the staged network, in radians.
///
/// Angles are addressed 1-based through `theta(i)` so that BS number i in
/// the wiring table is `theta(i)`.
class AngleVector {
   public:
    AngleVector() = default;
    explicit AngleVector(std::span<const double> radians);
    explicit AngleVector(const std::array<double, kAngleCount> &radians);

    double theta(int i) const;
    const std::array<double, kAngleCount> &values() const { return values_; }

    bool operator==(const AngleVector &) const = default;

   private:
    std::array<double, kAngleCount> values_{};
};

/// A real beam splitter acting on two mode lines.
///
/// After the op, line_a holds cos*a + sin*b and line_b holds -sin*a + cos*b.
struct BeamSplitterOp {
    int line_a = 0;
    int line_b = 1;
    double theta = 0.0;
    /// Position of the angle in the AngleVector (1..12), or 0 for free-standing ops.
    int angle_index = 0;

    void validate() const;
};

/// Ordered list of beam splitters over 8 mode lines plus the final routing
/// that names which line carries output mode k.
struct Network {
    std::vector<BeamSplitterOp> ops;
    std::array<int, kModeCount> output_line{0, 1, 2, 3, 4, 5, 6, 7};

    void validate() const;
};

/// 2x2 rotation [[cos, sin], [-sin, cos]]. Throws std::invalid_argument on non-finite theta.
Matrix2 rotation_pair(double theta);

/// The three-stage, twelve-splitter network driven by `angles`.
///
/// Stage 1 mixes (0,4) (1,5) (2,6) (3,7); stage 2 mixes the first outputs of
/// splitters 1/3 and 2/4 and the second outputs likewise; stage 3 mixes
/// (c0,c1) (c4,c5) (c2,c3) (c6,c7) into output pairs (b0,b4) (b1,b5) (b2,b6)
/// (b3,b7). Because of that final routing, all-zero angles give a fixed
/// permutation rather than the identity.
Network staged_network(const AngleVector &angles);

/// A network holding a single splitter on (line_a, line_b) with identity routing.
Network single_splitter(int line_a, int line_b, double theta);

/// G with b = G a, composed from the ops in order and then routed.
TransferMatrix transfer_matrix(const Network &network);

/// Upper-left 4x4 block written out directly as trigonometric products,
/// without composing any matrices.
Matrix4 closed_form_block(const AngleVector &angles);

/// max |G G^T - I|.
double orthogonality_residual(const TransferMatrix &g);

struct BlockDecomposition {
    Matrix4 a;
    Matrix4 b;
    Matrix4 c;
    Matrix4 e;

    // max-norm residuals of A A^T + B B^T = I, C C^T + E E^T = I,
    // A C^T + B E^T = 0 and C A^T + E B^T = 0.
    double upper_rows_residual = 0.0;
    double lower_rows_residual = 0.0;
    double upper_lower_residual = 0.0;
    double lower_upper_residual = 0.0;

    double max_residual() const;
};

/// Splits G into quadrants. Throws ConsistencyError when G is not orthogonal
/// to within 1e-9.
BlockDecomposition block_decompose(const TransferMatrix &g);

}  // namespace bsgate

#endif
