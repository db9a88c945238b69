#include "urnmix/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "urnmix/symmetric.hpp"

namespace urnmix {

namespace {

// Binary exponentiation; exponent 0 gives exactly 1 even for base 0, which is
// the N = 0 convention the delta-at-start case relies on.
std::complex<double> pow_int(std::complex<double> base, int exponent) {
    std::complex<double> result(1.0, 0.0);
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

double real_pow_int(double base, int exponent) {
    double result = 1.0;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

std::vector<double> type_weights(const std::vector<Composition>& index) {
    std::vector<double> weights(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) {
        weights[i] = multinomial(index[i]).convert_to<double>();
    }
    return weights;
}

// Check and strip the imaginary parts of spectrally reconstructed masses,
// clamp tiny negatives, and verify the result is a probability distribution.
TypeDistribution finish_masses(int urns, int balls,
                               std::vector<std::complex<double>> raw) {
    std::vector<double> masses(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (std::abs(raw[i].imag()) > kMassImagTolerance) {
            throw std::runtime_error(
                "reconstructed mass has imaginary residue beyond tolerance");
        }
        double mass = raw[i].real();
        if (mass < 0.0) {
            if (mass < kMassNegativeTolerance) {
                throw std::runtime_error(
                    "reconstructed mass is negative beyond tolerance");
            }
            mass = 0.0;
        }
        masses[i] = mass;
    }
    TypeDistribution dist(urns, balls, std::move(masses));
    if (std::abs(dist.total_mass() - 1.0) > 1e-9) {
        throw std::runtime_error("reconstructed masses do not sum to 1");
    }
    return dist;
}

}  // namespace

TypeDistribution::TypeDistribution(int urns, int balls, std::vector<double> mass_per_state)
    : urns_(urns), balls_(balls), masses_(std::move(mass_per_state)) {
    if (urns_ < 1 || balls_ < 0) {
        throw std::invalid_argument("TypeDistribution: bad dimensions");
    }
    if (BigInt(masses_.size()) != composition_count(urns_, balls_)) {
        throw std::invalid_argument("TypeDistribution: one mass per type required");
    }
}

TypeDistribution TypeDistribution::uniform(int urns, int balls) {
    const double states = std::pow(static_cast<double>(urns), balls);
    const std::size_t count = composition_count(urns, balls).convert_to<std::size_t>();
    return TypeDistribution(urns, balls, std::vector<double>(count, 1.0 / states));
}

TypeDistribution TypeDistribution::initial(int urns, int balls) {
    const std::size_t count = composition_count(urns, balls).convert_to<std::size_t>();
    std::vector<double> masses(count, 0.0);
    masses[0] = 1.0;  // (n,0,...,0) is first in the fixed order
    return TypeDistribution(urns, balls, std::move(masses));
}

double TypeDistribution::mass_per_state(const Composition& type) const {
    if (type.urns() != urns_ || type.balls() != balls_) {
        throw std::invalid_argument("TypeDistribution: type from another space");
    }
    return masses_.at(composition_rank(type));
}

double TypeDistribution::total_mass() const {
    const std::vector<Composition> index = compositions(urns_, balls_);
    double total = 0.0;
    for (std::size_t i = 0; i < index.size(); ++i) {
        total += multinomial(index[i]).convert_to<double>() * masses_[i];
    }
    return total;
}

SpectralProfile SpectralProfile::build(ShuffleKind kind, int urns, int balls,
                                       std::size_t max_types) {
    if (urns < 2 || balls < 1) {
        throw std::invalid_argument("SpectralProfile: need r >= 2 urns and n >= 1 balls");
    }
    if (composition_count(urns, balls) > max_types) {
        throw std::length_error("SpectralProfile: composition count exceeds the cap");
    }
    SpectralProfile profile;
    profile.shuffle = kind;
    profile.urns = urns;
    profile.balls = balls;
    const std::vector<Composition> index = compositions(urns, balls);
    profile.coefficients.resize(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) {
        profile.coefficients[i] = fourier_coefficient(kind, index[i]);
    }
    profile.coefficients[0] = {1.0, 0.0};  // trivial component, pinned exact
    return profile;
}

TypeDistribution distribution_after(const ZonalTable& table, ShuffleKind kind, int steps) {
    if (steps < 0) {
        throw std::invalid_argument("distribution_after: steps must be non-negative");
    }
    const std::vector<Composition>& index = table.index();
    const std::size_t count = index.size();
    const SpectralProfile profile =
        SpectralProfile::build(kind, table.urns(), table.balls(), count);

    // per-state mass at l: r^-n sum_k multinomial(k) f_k^steps omega_{k,l}
    const double states = std::pow(static_cast<double>(table.urns()), table.balls());
    std::vector<std::complex<double>> weighted(count);
    for (std::size_t k = 0; k < count; ++k) {
        weighted[k] = pow_int(profile.coefficients[k], steps) *
                      (multinomial(index[k]).convert_to<double>() / states);
    }
    std::vector<std::complex<double>> raw(count, std::complex<double>(0.0, 0.0));
    for (std::size_t k = 0; k < count; ++k) {
        const std::complex<double> w = weighted[k];
        if (w.real() == 0.0 && w.imag() == 0.0) continue;
        for (std::size_t l = 0; l < count; ++l) {
            raw[l] += w * table.value(k, l);
        }
    }
    return finish_masses(table.urns(), table.balls(), std::move(raw));
}

TypeDistribution distribution_after(ShuffleKind kind, int steps, int urns, int balls,
                                    std::size_t max_types) {
    return distribution_after(ZonalTable::build(urns, balls, max_types), kind, steps);
}

TypeDistribution distribution_after_elementary(int steps, int urns, int balls) {
    if (steps < 0) {
        throw std::invalid_argument("distribution_after: steps must be non-negative");
    }
    if (urns < 2 || balls < 1) {
        throw std::invalid_argument("distribution_after: need r >= 2 urns and n >= 1 balls");
    }
    const std::vector<Composition> index = compositions(urns, balls);
    const double states = std::pow(static_cast<double>(urns), balls);

    // Eigenvalue attached to every component with k_0 balls in part 0.
    std::vector<double> powered(static_cast<std::size_t>(balls) + 1);
    for (int k0 = 0; k0 <= balls; ++k0) {
        const double eigenvalue = (static_cast<double>(urns) * k0 - balls) /
                                  (static_cast<double>(balls) * (urns - 1));
        powered[static_cast<std::size_t>(k0)] = real_pow_int(eigenvalue, steps);
    }

    std::vector<std::complex<double>> raw(index.size());
    std::vector<std::complex<double>> phi(static_cast<std::size_t>(balls));
    for (std::size_t i = 0; i < index.size(); ++i) {
        // phi for this type: one r-1 per ball in urn 0, one -1 per other ball
        const int zeros = index[i][0];
        std::fill(phi.begin(), phi.begin() + zeros,
                  std::complex<double>(static_cast<double>(urns) - 1.0, 0.0));
        std::fill(phi.begin() + zeros, phi.end(), std::complex<double>(-1.0, 0.0));
        const std::vector<std::complex<double>> e = elementary_symmetric_all(phi);
        std::complex<double> mass = 0.0;
        for (int k0 = 0; k0 <= balls; ++k0) {
            mass += powered[static_cast<std::size_t>(k0)] *
                    e[static_cast<std::size_t>(balls - k0)];
        }
        raw[i] = mass / states;
    }
    return finish_masses(urns, balls, std::move(raw));
}

double tv_distance(const TypeDistribution& a, const TypeDistribution& b) {
    if (a.urns() != b.urns() || a.balls() != b.balls()) {
        throw std::invalid_argument("tv_distance: distributions on different spaces");
    }
    const std::vector<Composition> index = compositions(a.urns(), a.balls());
    const std::vector<double> weights = type_weights(index);
    double total = 0.0;
    for (std::size_t i = 0; i < index.size(); ++i) {
        total += weights[i] * std::abs(a.masses()[i] - b.masses()[i]);
    }
    return total / 2.0;
}

TvBound tv_upper_bound(ShuffleKind kind, int steps, int urns, int balls,
                       std::size_t max_types) {
    if (steps < 0) {
        throw std::invalid_argument("tv_upper_bound: steps must be non-negative");
    }
    const SpectralProfile profile = SpectralProfile::build(kind, urns, balls, max_types);
    const std::vector<Composition> index = compositions(urns, balls);
    double sum = 0.0;
    for (std::size_t k = 1; k < index.size(); ++k) {  // skip the trivial component
        const double modulus_sq = std::norm(profile.coefficients[k]);
        sum += multinomial(index[k]).convert_to<double>() * real_pow_int(modulus_sq, steps);
    }
    TvBound bound{};
    bound.squared = sum / 4.0;
    bound.value = std::sqrt(bound.squared);
    return bound;
}

CutoffEstimate cutoff_threshold(int urns, int balls, double c) {
    if (urns < 2 || balls < 1) {
        throw std::invalid_argument("cutoff_threshold: need r >= 2 urns and n >= 1 balls");
    }
    CutoffEstimate estimate{};
    estimate.steps = (static_cast<double>(balls) * (urns - 1) / (2.0 * urns)) *
                     (static_cast<double>(balls) * std::log(static_cast<double>(urns)) + c);
    estimate.guarantee = std::exp(-c) / 4.0;
    estimate.offset_by_quarter = urns == 2;
    return estimate;
}

TypeDistribution limit_distribution(int urns, int balls, Parity parity) {
    if (urns < 2 || balls < 1) {
        throw std::invalid_argument("limit_distribution: need r >= 2 urns and n >= 1 balls");
    }
    if (urns >= 3) {
        return TypeDistribution::uniform(urns, balls);
    }
    // r = 2: uniform over the configurations whose urn-1 count has the asked
    // parity; there are 2^{n-1} of them either way.
    const std::vector<Composition> index = compositions(urns, balls);
    const int wanted = parity == Parity::Even ? 0 : 1;
    const double mass = std::ldexp(1.0, -(balls - 1));
    std::vector<double> masses(index.size(), 0.0);
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (index[i][1] % 2 == wanted) {
            masses[i] = mass;
        }
    }
    return TypeDistribution(urns, balls, std::move(masses));
}

}  // namespace urnmix
