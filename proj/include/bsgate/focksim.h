#ifndef BSGATE_FOCKSIM_H
#define BSGATE_FOCKSIM_H

#include <array>
#include <complex>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bsgate/bsnet.h"
#include "bsgate/occsim.h"

namespace bsgate {

inline constexpr int kMaxPhotons = 4;

using Amplitude = std::complex<double>;

/// Photon counts over the 8 modes, at most 4 photons in total.
struct FockConfiguration {
    std::array<int, kModeCount> occupations{};

    /// Builds a configuration from a list of occupied modes (repeats allowed).
    static FockConfiguration from_modes(std::span<const int> modes);

    int photon_count() const;
    /// Occupied modes as a sorted multiset, e.g. {1, 1} for two photons in mode 1.
    std::vector<int> modes() const;
    bool has_bunching() const;
    /// Modes joined by '-', e.g. "0-2" or "1-1".
    std::string label() const;
    void validate() const;

    auto operator<=>(const FockConfiguration &) const = default;
};

/// Either two photons injected into modes (first, second), or a logical
/// superposition a|00> + b|01> + c|10> + d|11> of the dual-rail injections.
class TwoPhotonInput {
   public:
    struct ModePair {
        int first = 0;
        int second = 0;
    };
    using Amplitudes = std::array<Amplitude, 4>;

    static TwoPhotonInput pair(int k, int l);
    static TwoPhotonInput logical(const LogicalState &state);
    /// Throws std::invalid_argument unless the squared norms sum to 1 within `tolerance`.
    static TwoPhotonInput superposition(const Amplitudes &amplitudes, double tolerance = kExactTolerance);

    bool is_pair() const { return std::holds_alternative<ModePair>(value_); }
    const ModePair &mode_pair() const { return std::get<ModePair>(value_); }
    const Amplitudes &amplitudes() const { return std::get<Amplitudes>(value_); }

   private:
    explicit TwoPhotonInput(std::variant<ModePair, Amplitudes> v) : value_(std::move(v)) {}
    std::variant<ModePair, Amplitudes> value_;
};

struct EventDistribution {
    std::map<FockConfiguration, Amplitude> amplitudes;

    double probability(const FockConfiguration &config) const;
    double total_probability() const;
    bool empty() const { return amplitudes.empty(); }
};

/// Permanent of a square matrix of size <= 4 (Ryser's formula).
/// Throws UnsupportedSize above 4 and std::invalid_argument when not square.
double permanent(const Eigen::MatrixXd &m);
Amplitude permanent(const Eigen::MatrixXcd &m);

/// Output distribution of an arbitrary Fock input (n <= 4) over every output
/// configuration with the same photon number. Throws ConsistencyError when G
/// is not orthogonal.
EventDistribution evolve(const TransferMatrix &g, const FockConfiguration &input);

/// Two-photon evolution through permanents; superpositions are combined linearly.
EventDistribution evolve_two_photon(const TransferMatrix &g, const TwoPhotonInput &input);

/// Independent route: expands the product of the two transformed creation
/// operators term by term and collects by output configuration.
EventDistribution brute_force_distribution(const TransferMatrix &g, const TwoPhotonInput &input);

/// Largest |amplitude difference| over the union of both key sets.
double max_amplitude_difference(const EventDistribution &a, const EventDistribution &b);

}  // namespace bsgate

#endif
