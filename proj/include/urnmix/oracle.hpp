#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "urnmix/composition.hpp"
#include "urnmix/shuffle.hpp"
#include "urnmix/spectral.hpp"

namespace urnmix {

/// Default ceiling on the number of configurations (r^n) an oracle run may
/// touch.  The CLI lets an environment variable raise it.
inline constexpr std::size_t kDefaultStateCap = 4096;

/// r^n, guarded by the cap.
std::size_t state_count(int urns, int balls, std::size_t cap = kDefaultStateCap);

/// Mixed-radix index of a configuration (base r, ball 1 most significant).
std::size_t configuration_index(const UrnConfiguration& b);
UrnConfiguration configuration_from_index(std::size_t index, int urns, int balls);

/// The full one-step transition matrix over all r^n configurations, stored
/// sparsely: every row keeps its nonzero entries as integer numerators over
/// the shared denominator.  Rows are exactly stochastic by construction.
class DenseKernel {
public:
    struct Entry {
        std::uint32_t to;
        std::uint32_t numerator;
    };

    int urns() const noexcept { return urns_; }
    int balls() const noexcept { return balls_; }
    ShuffleKind shuffle() const noexcept { return shuffle_; }
    std::size_t states() const noexcept { return rows_.size(); }

    /// Common denominator of all entries: (r-1)n, n, or 2n by shuffle.
    long long denominator() const noexcept { return denominator_; }

    /// Exact probability of the move from -> to; 0 for absent entries.
    Rational entry(std::size_t from, std::size_t to) const;
    const std::vector<Entry>& row(std::size_t from) const { return rows_.at(from); }
    Rational row_sum(std::size_t from) const;

    friend DenseKernel build_kernel(ShuffleKind, int, int, std::size_t);

private:
    int urns_ = 0;
    int balls_ = 0;
    ShuffleKind shuffle_ = ShuffleKind::AnyOther;
    long long denominator_ = 1;
    std::vector<std::vector<Entry>> rows_;
};

DenseKernel build_kernel(ShuffleKind kind, int urns, int balls,
                         std::size_t max_states = kDefaultStateCap);

/// Exact distribution after `steps` applications of the kernel to the point
/// mass at the start configuration.  Masses are integer counts over the
/// common denominator denominator()^steps, so nothing is lost to rounding no
/// matter how many steps are taken.
class PowerDistribution {
public:
    int urns() const noexcept { return urns_; }
    int balls() const noexcept { return balls_; }
    int steps() const noexcept { return steps_; }
    std::size_t states() const noexcept { return counts_.size(); }

    const BigInt& numerator(std::size_t state) const { return counts_.at(state); }
    const BigInt& denominator() const noexcept { return denominator_; }
    double mass(std::size_t state) const;

    /// Fold the per-configuration masses down to one value per occupancy
    /// type.  The counts within a type are asserted identical on the way --
    /// the walk cannot tell permuted balls apart, and any violation would
    /// mean the kernel is wrong.
    TypeDistribution collapse_to_types() const;

    friend PowerDistribution power_distribution(const DenseKernel&, int);

private:
    int urns_ = 0;
    int balls_ = 0;
    int steps_ = 0;
    std::vector<BigInt> counts_;
    BigInt denominator_ = 1;
};

PowerDistribution power_distribution(const DenseKernel& kernel, int steps);

/// The splittable generator used for simulation: one 64-bit word of state,
/// advanced by a Weyl increment and finalised by an avalanche mix.  Trial t
/// of a run seeded with s draws from SplitMix64(s + (t+1) * golden), so
/// trials are independent streams and any subset can be reproduced.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept;

    /// Uniform draw from {0, ..., bound-1}, unbiased via rejection.
    std::uint64_t bounded(std::uint64_t bound) noexcept;

    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

private:
    std::uint64_t state_;
};

/// Outcome counts of repeated simulated walks, per configuration index.
struct EmpiricalDistribution {
    int urns = 0;
    int balls = 0;
    int steps = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> counts;

    /// Name of the generator, recorded in reports so a run can be redone.
    static constexpr std::string_view kRngName = "splitmix64";
};

EmpiricalDistribution simulate(ShuffleKind kind, int urns, int balls, int steps,
                               std::uint64_t trials, std::uint64_t seed,
                               std::size_t max_states = kDefaultStateCap);

/// Total variation distance between the empirical counts and the exact
/// distribution, over configurations.
double empirical_tv(const EmpiricalDistribution& sample, const PowerDistribution& exact);

}  // namespace urnmix
