#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "urnmix/composition.hpp"
#include "urnmix/shuffle.hpp"
#include "urnmix/zonal.hpp"

namespace urnmix {

/// A distribution that is constant on each occupancy type, stored as one
/// per-state mass per type in the fixed composition order.  The mass of the
/// whole type l is multinomial(l) times masses()[rank(l)].
class TypeDistribution {
public:
    TypeDistribution(int urns, int balls, std::vector<double> mass_per_state);

    static TypeDistribution uniform(int urns, int balls);
    /// Point mass on the all-in-urn-0 start configuration.
    static TypeDistribution initial(int urns, int balls);

    int urns() const noexcept { return urns_; }
    int balls() const noexcept { return balls_; }
    std::size_t type_count() const noexcept { return masses_.size(); }

    double mass_per_state(std::size_t rank) const { return masses_.at(rank); }
    double mass_per_state(const Composition& type) const;
    const std::vector<double>& masses() const noexcept { return masses_; }

    /// sum over types of multinomial(l) * mass_per_state(l); 1 up to rounding.
    double total_mass() const;

private:
    int urns_ = 0;
    int balls_ = 0;
    std::vector<double> masses_;
};

/// Numerical guard rails applied when a distribution is synthesised from a
/// spectral sum: imaginary residue above the first bound is an error, a
/// negative real mass below the second is an error, and small negatives are
/// clamped to zero.
inline constexpr double kMassImagTolerance = 1e-9;
inline constexpr double kMassNegativeTolerance = -1e-12;

/// Ceiling on the number of types the spectral routines will handle in one
/// call; generous, since the per-type cost is tiny.
inline constexpr std::size_t kDefaultSpectralCap = std::size_t{1} << 20;

/// All spectral coefficients f_k of a shuffle for fixed (r, n), in the fixed
/// composition order.  The trivial component (n,0,...,0) always carries
/// exactly 1.
struct SpectralProfile {
    ShuffleKind shuffle;
    int urns = 0;
    int balls = 0;
    std::vector<std::complex<double>> coefficients;

    static SpectralProfile build(ShuffleKind kind, int urns, int balls,
                                 std::size_t max_types = kDefaultSpectralCap);
};

/// Distribution after `steps` moves from the start configuration, by spectral
/// inversion: per-state mass at type l is
///   r^{-n} sum_k multinomial(k) f_k^steps omega_{k,l}.
TypeDistribution distribution_after(const ZonalTable& table, ShuffleKind kind, int steps);
TypeDistribution distribution_after(ShuffleKind kind, int steps, int urns, int balls,
                                    std::size_t max_types = kDefaultTableCap);

/// Same distribution for the AnyOther shuffle only, through the elementary
/// symmetric route: per-state mass at l is
///   r^{-n} sum_j ((r (n-j) - n) / (n (r-1)))^steps e_j(phi(l)),
/// where phi(l) has l_0 entries equal to r-1 and n - l_0 entries equal to -1.
/// No spherical table is needed, so this both cross-checks the inversion and
/// scales to much larger n.
TypeDistribution distribution_after_elementary(int steps, int urns, int balls);

/// Total variation distance between two type distributions on the same space.
double tv_distance(const TypeDistribution& a, const TypeDistribution& b);

struct TvBound {
    double value;    // bound on TV itself: sqrt(squared)
    double squared;  // bound on TV^2: (1/4) sum_{k != trivial} multinomial(k) |f_k|^{2 steps}
};

/// Spectral upper bound TV^2 <= (1/4) sum_{k != trivial} multinomial(k) |f_k|^{2 steps},
/// reported both squared and unsquared.
TvBound tv_upper_bound(ShuffleKind kind, int steps, int urns, int balls,
                       std::size_t max_types = kDefaultSpectralCap);

struct CutoffEstimate {
    double steps;            // n (r-1) / (2r) * (n log r + c)
    double guarantee;        // (1/4) exp(-c)
    bool offset_by_quarter;  // r = 2: the guarantee applies to TV^2 - 1/4
};

/// Number of steps after which the AnyOther shuffle is guaranteed mixed up to
/// the stated bound.  For r = 2 the chain is periodic, so the guarantee
/// applies to TV^2 - 1/4 instead of TV^2.
CutoffEstimate cutoff_threshold(int urns, int balls, double c);

enum class Parity { Even, Odd };

/// Where the chain actually converges.  For r >= 3 (aperiodic) this is the
/// uniform distribution regardless of the parity argument.  For r = 2 the
/// chain has period two: the count l_1 in urn 1 starts at 0 and flips parity
/// on every move, so the limit along even (odd) step counts is the uniform
/// distribution on the half of the cube with l_1 even (odd), each such state
/// carrying 2^{-(n-1)}.
TypeDistribution limit_distribution(int urns, int balls, Parity parity);

}  // namespace urnmix
