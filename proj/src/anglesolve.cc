#include "bsgate/anglesolve.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>

namespace bsgate {

namespace {

constexpr unsigned kAssignmentCount = 1u << kAngleCount;
constexpr int kLineGrid = 24;


SignConstraint fixed(int index, int sign) { return SignConstraint{{index}, sign, 1}; }

Matrix4 composed_block(const SignAssignment &s) {
    return transfer_matrix(staged_network(s.angles())).topLeftCorner<4, 4>();
}

using Theta = Eigen::Matrix<double, kAngleCount, 1>;

double squared_residual(const Theta &theta, const Matrix4 &target) {
    std::array<double, kAngleCount> raw{};
    for (int i = 0; i < kAngleCount; ++i) {
        raw[i] = theta[i];
    }
    return (std::sqrt(2.0) * closed_form_block(AngleVector(raw)) - target).squaredNorm();
}

double wrap_angle(double t) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    t = std::fmod(t, two_pi);
    return t < 0 ? t + two_pi : t;
}

// Minimizes along theta + alpha * direction (unit length) for alpha in
// [-pi, pi): a coarse scan picks the basin, Brent polishes it. Returns the
// new objective value; theta moves only on improvement.
double line_minimize(Theta &theta, const Theta &direction, double current, const Matrix4 &target) {
    constexpr double step = 2.0 * std::numbers::pi / kLineGrid;
    auto along = [&](double alpha) { return squared_residual(theta + alpha * direction, target); };
    double best_alpha = 0.0;
    double best_f = current;
    for (int k = 1; k < kLineGrid; ++k) {
        double alpha = (k <= kLineGrid / 2 ? k : k - kLineGrid) * step;
        double f = along(alpha);
        if (f < best_f) {
            best_f = f;
            best_alpha = alpha;
        }
    }
    auto [alpha, f] = boost::math::tools::brent_find_minima(along, best_alpha - step, best_alpha + step,
                                                             std::numeric_limits<double>::digits);
    if (f < best_f) {
        best_f = f;
        best_alpha = alpha;
    }
    if (best_f < current) {
        theta += best_alpha * direction;
        return best_f;
    }
    return current;
}

// Powell's conjugate-direction method, starting from the coordinate axes.
double powell_minimize(Theta &theta, const Matrix4 &target, int max_iterations) {
    std::array<Theta, kAngleCount> directions;
    for (int i = 0; i < kAngleCount; ++i) {
        directions[i] = Theta::Unit(i);
    }
    double f = squared_residual(theta, target);
    for (int iter = 0; iter < max_iterations && f > 1e-30; ++iter) {
        const double f_start = f;
        const Theta start = theta;
        int biggest = 0;
        double biggest_drop = 0.0;
        for (int i = 0; i < kAngleCount; ++i) {
            const double before = f;
            f = line_minimize(theta, directions[i], f, target);
            if (before - f > biggest_drop) {
                biggest_drop = before - f;
                biggest = i;
            }
        }
        if (2.0 * (f_start - f) <= 1e-15 * (std::abs(f_start) + std::abs(f)) + 1e-300) {
            break;
        }
        Theta displacement = theta - start;
        const double length = displacement.norm();
        if (length == 0.0) {
            continue;
        }
        const double f_extrapolated = squared_residual(2.0 * theta - start, target);
        if (f_extrapolated < f_start) {
            const double t = 2.0 * (f_start - 2.0 * f + f_extrapolated) * std::pow(f_start - f - biggest_drop, 2) -
                             biggest_drop * std::pow(f_start - f_extrapolated, 2);
            if (t < 0.0) {
                displacement /= length;
                f = line_minimize(theta, displacement, f, target);
                directions[biggest] = directions[kAngleCount - 1];
                directions[kAngleCount - 1] = displacement;
            }
        }
    }
    return f;
}

}  // namespace

SignAssignment SignAssignment::from_code(unsigned code) {
    if (code >= kAssignmentCount) {
        throw std::invalid_argument("sign assignment code out of range");
    }
    SignAssignment s;
    for (int i = 0; i < kAngleCount; ++i) {
        s.signs[i] = (code >> (kAngleCount - 1 - i)) & 1u ? -1 : 1;
    }
    return s;
}

unsigned SignAssignment::code() const {
    unsigned code = 0;
    for (int i = 0; i < kAngleCount; ++i) {
        code = (code << 1) | (signs[i] < 0 ? 1u : 0u);
    }
    return code;
}

AngleVector SignAssignment::angles() const {
    validate();
    std::array<double, kAngleCount> theta{};
    for (int i = 0; i < kAngleCount; ++i) {
        theta[i] = signs[i] * std::numbers::pi / 4.0;
    }
    return AngleVector(theta);
}

std::string SignAssignment::label() const {
    std::string out;
    for (int s : signs) {
        out += s > 0 ? '+' : '-';
    }
    return out;
}

void SignAssignment::validate() const {
    for (int s : signs) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("sign assignment entries must be +1 or -1");
        }
    }
}

double SignConstraint::constant() const { return sign * std::pow(2.0, -0.5 * half_powers); }

std::string SignConstraint::describe() const {
    std::string out;
    for (int idx : indices) {
        if (!out.empty()) {
            out += '*';
        }
        out += "sin" + std::to_string(idx);
    }
    static constexpr const char *kMagnitudes[] = {"", "1/sqrt(2)", "1/2", "1/sqrt(8)"};
    return out + " = " + (sign < 0 ? "-" : "") + kMagnitudes[half_powers];
}

void ConditionSet::validate() const {
    for (const auto &c : constraints) {
        if (c.indices.empty()) {
            throw std::invalid_argument("constraint without angles");
        }
        for (int idx : c.indices) {
            if (idx < 1 || idx > kAngleCount) {
                throw std::invalid_argument("constraint angle index out of range 1..12");
            }
        }
        if (c.sign != 1 && c.sign != -1) {
            throw std::invalid_argument("constraint sign must be +1 or -1");
        }
        if (c.half_powers < 1 || c.half_powers > 3) {
            throw std::invalid_argument("constraint constant must be +-1/sqrt(2), +-1/2 or +-1/sqrt(8)");
        }
    }
}

ConditionSet sign_conditions(GateKind gate) {
    ConditionSet set;
    set.gate = gate;
    switch (gate) {
        case GateKind::cnot:
            set.constraints = {
                fixed(1, -1), fixed(3, -1), fixed(6, -1), fixed(9, -1),
                fixed(5, 1),  fixed(7, 1),  fixed(10, 1),
                {{2, 11}, 1, 2},
                {{4, 12}, -1, 2},
                {{4, 8, 11}, -1, 3},
                {{2, 8, 12}, 1, 3},
            };
            return set;
        case GateKind::swap:
            set.constraints = {
                fixed(6, -1), fixed(9, -1),
                fixed(1, 1),  fixed(3, 1), fixed(5, 1), fixed(7, 1), fixed(10, 1),
                {{4, 12}, -1, 2},
                {{2, 11}, -1, 2},
                {{4, 8, 11}, -1, 3},
                {{2, 8, 12}, -1, 3},
            };
            return set;
        case GateKind::custom:
            break;
    }
    throw std::invalid_argument("no sign conditions are known for custom gates");
}

bool check_conditions(const SignAssignment &signs, const ConditionSet &conditions) {
    signs.validate();
    conditions.validate();
    const double half = 1.0 / std::sqrt(2.0);
    for (const auto &c : conditions.constraints) {
        double product = 1.0;
        for (int idx : c.indices) {
            product *= signs.sign(idx) * half;
        }
        if (std::abs(product - c.constant()) > kExactTolerance) {
            return false;
        }
    }
    return true;
}

std::vector<SignAssignment> enumerate_sign_solutions(const GateTarget &target) {
    std::vector<SignAssignment> out;
    for (unsigned code = 0; code < kAssignmentCount; ++code) {
        SignAssignment s = SignAssignment::from_code(code);
        if (block_matches_target(composed_block(s), target) < kExactTolerance) {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<SignAssignment> condition_solutions(const ConditionSet &conditions) {
    std::vector<SignAssignment> out;
    for (unsigned code = 0; code < kAssignmentCount; ++code) {
        SignAssignment s = SignAssignment::from_code(code);
        if (check_conditions(s, conditions)) {
            out.push_back(s);
        }
    }
    return out;
}

ConditionCrossCheck cross_check_conditions(const GateTarget &target, const ConditionSet &conditions) {
    ConditionCrossCheck check;
    check.enumerated = enumerate_sign_solutions(target);
    check.from_conditions = condition_solutions(conditions);
    std::set_difference(check.enumerated.begin(), check.enumerated.end(), check.from_conditions.begin(),
                        check.from_conditions.end(), std::back_inserter(check.only_enumerated));
    std::set_difference(check.from_conditions.begin(), check.from_conditions.end(), check.enumerated.begin(),
                        check.enumerated.end(), std::back_inserter(check.only_conditions));

    const size_t common = check.enumerated.size() - check.only_enumerated.size();
    if (check.only_enumerated.empty() && check.only_conditions.empty()) {
        check.status = "match";
    } else if (common == 0) {
        check.status = "disjoint";
    } else if (check.only_conditions.empty()) {
        check.status = "conditions-subset";
    } else if (check.only_enumerated.empty()) {
        check.status = "conditions-superset";
    } else {
        check.status = "partial-overlap";
    }

    if (!check.from_conditions.empty()) {
        for (GateKind kind : {GateKind::cnot, GateKind::swap}) {
            GateTarget named = target_for(kind);
            bool all = std::all_of(check.from_conditions.begin(), check.from_conditions.end(),
                                   [&](const SignAssignment &s) {
                                       return block_matches_target(composed_block(s), named) < kExactTolerance;
                                   });
            if (all) {
                check.conditions_realize = kind;
                break;
            }
        }
    }
    return check;
}

SearchResult continuous_angle_search(const Matrix4 &target, double tolerance, const SearchOptions &options) {
    if (!target.allFinite()) {
        throw std::invalid_argument("search target has non-finite entries");
    }
    if (!(tolerance > 0) || !std::isfinite(tolerance)) {
        throw std::invalid_argument("search tolerance must be positive");
    }
    if (options.restarts < 1 || options.max_iterations < 1) {
        throw std::invalid_argument("search needs at least one restart and one sweep");
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);

    SearchResult result;
    double best = std::numeric_limits<double>::infinity();
    std::array<double, kAngleCount> best_theta{};


    for (int r = 0; r < options.restarts; ++r) {
        Theta theta;
        for (int i = 0; i < kAngleCount; ++i) {
            theta[i] = uniform(rng);
        }
        const double f = powell_minimize(theta, target, options.max_iterations);
        if (f < best) {
            best = f;
            for (int i = 0; i < kAngleCount; ++i) {
                best_theta[i] = wrap_angle(theta[i]);
            }
        }
        result.best_so_far.push_back(std::sqrt(best));
    }

    result.angles = AngleVector(best_theta);
    result.residual = std::sqrt(best);
    result.converged = result.residual < tolerance;
    return result;
}

}  // namespace bsgate
