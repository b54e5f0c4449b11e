#include "bsgate/focksim.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bsgate/errors.h"

namespace bsgate {

namespace {

constexpr double kOrthogonalityGate = 1e-9;

void require_orthogonal(const TransferMatrix &g) {
    double r = orthogonality_residual(g);
    if (!(r < kOrthogonalityGate)) {
        throw ConsistencyError("transfer matrix is not orthogonal (residual " + std::to_string(r) + ")");
    }
}

template <typename Scalar>
Scalar ryser(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &m) {
    const auto n = m.rows();
    if (n != m.cols()) {
        throw std::invalid_argument("permanent needs a square matrix");
    }
    if (n > kMaxPhotons) {
        throw UnsupportedSize("permanent is limited to 4x4, got " + std::to_string(n) + "x" + std::to_string(n));
    }
    if (n == 0) {
        return Scalar(1);
    }
    Scalar total(0);
    for (unsigned subset = 1; subset < (1u << n); ++subset) {
        Scalar prod(1);
        for (Eigen::Index r = 0; r < n; ++r) {
            Scalar row_sum(0);
            for (Eigen::Index c = 0; c < n; ++c) {
                if (subset & (1u << c)) {
                    row_sum += m(r, c);
                }
            }
            prod *= row_sum;
        }
        int bits = __builtin_popcount(subset);
        total += ((n - bits) % 2 == 0) ? prod : -prod;
    }
    return total;
}

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

double bosonic_norm(const FockConfiguration &c) {
    double f = 1;
    for (int n : c.occupations) {
        f *= factorial(n);
    }
    return std::sqrt(f);
}

// All multisets of `photons` modes out of 8, in lexicographic order.
void for_each_configuration(int photons, int first_mode, std::vector<int> &acc,
                            const auto &visit) {
    if (static_cast<int>(acc.size()) == photons) {
        visit(FockConfiguration::from_modes(acc));
        return;
    }
    for (int m = first_mode; m < kModeCount; ++m) {
        acc.push_back(m);
        for_each_configuration(photons, m, acc, visit);
        acc.pop_back();
    }
}

std::array<TwoPhotonInput::ModePair, 4> logical_injections() {
    std::array<TwoPhotonInput::ModePair, 4> out;
    for (int i = 0; i < 4; ++i) {
        auto s = LogicalState::from_label(kLogicalLabels[i]);
        out[i] = {s.control, 2 + s.target};
    }
    return out;
}

template <typename PairFn>
EventDistribution combine(const TwoPhotonInput &input, const PairFn &pair_distribution) {
    if (input.is_pair()) {
        return pair_distribution(input.mode_pair());
    }
    EventDistribution out;
    auto injections = logical_injections();
    for (int i = 0; i < 4; ++i) {
        Amplitude weight = input.amplitudes()[i];
        if (weight == Amplitude(0)) {
            continue;
        }
        for (const auto &[config, amp] : pair_distribution(injections[i]).amplitudes) {
            out.amplitudes[config] += weight * amp;
        }
    }
    return out;
}

}  // namespace

FockConfiguration FockConfiguration::from_modes(std::span<const int> modes) {
    FockConfiguration c;
    for (int m : modes) {
        if (m < 0 || m >= kModeCount) {
            throw std::invalid_argument("mode index out of range [0,8)");
        }
        c.occupations[m] += 1;
    }
    c.validate();
    return c;
}

int FockConfiguration::photon_count() const {
    int n = 0;
    for (int x : occupations) {
        n += x;
    }
    return n;
}

std::vector<int> FockConfiguration::modes() const {
    std::vector<int> out;
    for (int m = 0; m < kModeCount; ++m) {
        out.insert(out.end(), occupations[m], m);
    }
    return out;
}

bool FockConfiguration::has_bunching() const {
    return std::any_of(occupations.begin(), occupations.end(), [](int x) { return x > 1; });
}

std::string FockConfiguration::label() const {
    std::string out;
    for (int m : modes()) {
        if (!out.empty()) {
            out += '-';
        }
        out += std::to_string(m);
    }
    return out;
}

void FockConfiguration::validate() const {
    for (int x : occupations) {
        if (x < 0) {
            throw std::invalid_argument("negative photon count");
        }
    }
    if (photon_count() > kMaxPhotons) {
        throw UnsupportedSize("at most 4 photons are supported");
    }
}

TwoPhotonInput TwoPhotonInput::pair(int k, int l) {
    if (k < 0 || k >= kModeCount || l < 0 || l >= kModeCount) {
        throw std::invalid_argument("input mode out of range [0,8)");
    }
    return TwoPhotonInput(ModePair{std::min(k, l), std::max(k, l)});
}

TwoPhotonInput TwoPhotonInput::logical(const LogicalState &state) {
    return pair(state.control, 2 + state.target);
}

TwoPhotonInput TwoPhotonInput::superposition(const Amplitudes &amplitudes, double tolerance) {
    double norm = 0;
    for (const auto &a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("superposition amplitude is not finite");
        }
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > tolerance) {
        throw std::invalid_argument("superposition is not normalized (norm^2 = " + std::to_string(norm) + ")");
    }
    return TwoPhotonInput(amplitudes);
}

double EventDistribution::probability(const FockConfiguration &config) const {
    auto it = amplitudes.find(config);
    return it == amplitudes.end() ? 0.0 : std::norm(it->second);
}

double EventDistribution::total_probability() const {
    double total = 0;
    for (const auto &[config, amp] : amplitudes) {
        total += std::norm(amp);
    }
    return total;
}

double permanent(const Eigen::MatrixXd &m) { return ryser<double>(m); }

Amplitude permanent(const Eigen::MatrixXcd &m) { return ryser<Amplitude>(m); }

EventDistribution evolve(const TransferMatrix &g, const FockConfiguration &input) {
    input.validate();
    require_orthogonal(g);
    const std::vector<int> in_modes = input.modes();
    const int n = static_cast<int>(in_modes.size());
    const double in_norm = bosonic_norm(input);

    EventDistribution out;
    std::vector<int> acc;
    for_each_configuration(n, 0, acc, [&](const FockConfiguration &config) {
        std::vector<int> out_modes = config.modes();
        Eigen::MatrixXd sub(n, n);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                sub(r, c) = g(out_modes[r], in_modes[c]);
            }
        }
        out.amplitudes[config] = permanent(sub) / (in_norm * bosonic_norm(config));
    });
    return out;
}

EventDistribution evolve_two_photon(const TransferMatrix &g, const TwoPhotonInput &input) {
    require_orthogonal(g);
    return combine(input, [&](const TwoPhotonInput::ModePair &p) {
        std::array<int, 2> modes{p.first, p.second};
        return evolve(g, FockConfiguration::from_modes(modes));
    });
}

EventDistribution brute_force_distribution(const TransferMatrix &g, const TwoPhotonInput &input) {
    require_orthogonal(g);
    return combine(input, [&](const TwoPhotonInput::ModePair &p) {
        // a_k^dag = sum_i G[i,k] b_i^dag; collect the 64 ordered products.
        std::map<FockConfiguration, double> coefficient;
        for (int i = 0; i < kModeCount; ++i) {
            for (int j = 0; j < kModeCount; ++j) {
                std::array<int, 2> modes{i, j};
                coefficient[FockConfiguration::from_modes(modes)] += g(i, p.first) * g(j, p.second);
            }
        }
        // (b_i^dag)^2 |0> = sqrt(2) |2_i>; a doubly injected mode carries 1/sqrt(2).
        const double input_norm = p.first == p.second ? 1.0 / std::sqrt(2.0) : 1.0;
        EventDistribution out;
        for (const auto &[config, coeff] : coefficient) {
            double creation_norm = config.has_bunching() ? std::sqrt(2.0) : 1.0;
            out.amplitudes[config] = coeff * creation_norm * input_norm;
        }
        return out;
    });
}

double max_amplitude_difference(const EventDistribution &a, const EventDistribution &b) {
    double worst = 0;
    for (const auto &[config, amp] : a.amplitudes) {
        auto it = b.amplitudes.find(config);
        Amplitude other = it == b.amplitudes.end() ? Amplitude(0) : it->second;
        worst = std::max(worst, std::abs(amp - other));
    }
    for (const auto &[config, amp] : b.amplitudes) {
        if (!a.amplitudes.contains(config)) {
            worst = std::max(worst, std::abs(amp));
        }
    }
    return worst;
}

}  // namespace bsgate
