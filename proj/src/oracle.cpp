#include "urnmix/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace urnmix {

std::size_t state_count(int urns, int balls, std::size_t cap) {
    if (urns < 1 || balls < 0) {
        throw std::invalid_argument("state_count: bad dimensions");
    }
    BigInt total = 1;
    for (int i = 0; i < balls; ++i) total *= urns;
    if (total > cap) {
        throw std::length_error("state space of " + total.str() +
                                " configurations exceeds the cap of " + std::to_string(cap));
    }
    return total.convert_to<std::size_t>();
}

std::size_t configuration_index(const UrnConfiguration& b) {
    std::size_t index = 0;
    for (int urn : b.assignment()) {
        index = index * static_cast<std::size_t>(b.urns()) + static_cast<std::size_t>(urn);
    }
    return index;
}

UrnConfiguration configuration_from_index(std::size_t index, int urns, int balls) {
    if (urns < 1 || balls < 0) {
        throw std::invalid_argument("configuration_from_index: bad dimensions");
    }
    std::vector<int> assignment(static_cast<std::size_t>(balls), 0);
    for (int i = balls - 1; i >= 0; --i) {
        assignment[static_cast<std::size_t>(i)] =
            static_cast<int>(index % static_cast<std::size_t>(urns));
        index /= static_cast<std::size_t>(urns);
    }
    if (index != 0) {
        throw std::invalid_argument("configuration_from_index: index out of range");
    }
    return UrnConfiguration(std::move(assignment), urns);
}

Rational DenseKernel::entry(std::size_t from, std::size_t to) const {
    for (const Entry& e : rows_.at(from)) {
        if (e.to == to) return Rational(e.numerator, denominator_);
    }
    return Rational(0);
}

Rational DenseKernel::row_sum(std::size_t from) const {
    long long sum = 0;
    for (const Entry& e : rows_.at(from)) sum += e.numerator;
    return Rational(sum, denominator_);
}

DenseKernel build_kernel(ShuffleKind kind, int urns, int balls, std::size_t max_states) {
    if (urns < 2 || balls < 1) {
        throw std::invalid_argument("build_kernel: need r >= 2 urns and n >= 1 balls");
    }
    const std::size_t states = state_count(urns, balls, max_states);

    DenseKernel kernel;
    kernel.urns_ = urns;
    kernel.balls_ = balls;
    kernel.shuffle_ = kind;
    switch (kind) {
        case ShuffleKind::AnyOther:
            kernel.denominator_ = static_cast<long long>(urns - 1) * balls;
            break;
        case ShuffleKind::CyclicLeft:
            kernel.denominator_ = balls;
            break;
        case ShuffleKind::CyclicBidirectional:
            kernel.denominator_ = urns == 2 ? balls : 2LL * balls;
            break;
    }
    kernel.rows_.resize(states);

    // Fill each row from transition_probability itself, so the oracle kernel
    // cannot drift from the quoted kernels: enumerate the single-ball
    // neighbours and scale the exact rational onto the common denominator.
    for (std::size_t from = 0; from < states; ++from) {
        const UrnConfiguration source = configuration_from_index(from, urns, balls);
        auto& row = kernel.rows_[from];
        long long total = 0;
        std::vector<int> assignment = source.assignment();
        for (int ball = 0; ball < balls; ++ball) {
            const int original = assignment[static_cast<std::size_t>(ball)];
            for (int dest = 0; dest < urns; ++dest) {
                if (dest == original) continue;
                assignment[static_cast<std::size_t>(ball)] = dest;
                const UrnConfiguration target(assignment, urns);
                const Rational p = transition_probability(kind, source, target);
                if (p.numerator() != 0) {
                    if (kernel.denominator_ % p.denominator() != 0) {
                        throw std::logic_error("build_kernel: denominator mismatch");
                    }
                    const long long numerator =
                        p.numerator() * (kernel.denominator_ / p.denominator());
                    row.push_back({static_cast<std::uint32_t>(configuration_index(target)),
                                   static_cast<std::uint32_t>(numerator)});
                    total += numerator;
                }
            }
            assignment[static_cast<std::size_t>(ball)] = original;
        }
        if (total != kernel.denominator_) {
            throw std::logic_error("build_kernel: row does not sum to 1");
        }
    }
    return kernel;
}

double PowerDistribution::mass(std::size_t state) const {
    using boost::multiprecision::cpp_rational;
    return cpp_rational(counts_.at(state), denominator_).convert_to<double>();
}

TypeDistribution PowerDistribution::collapse_to_types() const {
    const std::size_t types = composition_count(urns_, balls_).convert_to<std::size_t>();
    std::vector<const BigInt*> representative(types, nullptr);
    for (std::size_t state = 0; state < counts_.size(); ++state) {
        const std::size_t rank =
            composition_rank(configuration_from_index(state, urns_, balls_).type());
        if (representative[rank] == nullptr) {
            representative[rank] = &counts_[state];
        } else if (*representative[rank] != counts_[state]) {
            // the walk cannot distinguish permuted balls; this is unreachable
            // unless the kernel itself is broken
            throw std::logic_error("power_distribution: mass varies within a type");
        }
    }
    using boost::multiprecision::cpp_rational;
    std::vector<double> masses(types, 0.0);
    for (std::size_t rank = 0; rank < types; ++rank) {
        if (representative[rank] != nullptr) {
            masses[rank] =
                cpp_rational(*representative[rank], denominator_).convert_to<double>();
        }
    }
    return TypeDistribution(urns_, balls_, std::move(masses));
}

PowerDistribution power_distribution(const DenseKernel& kernel, int steps) {
    if (steps < 0) {
        throw std::invalid_argument("power_distribution: steps must be non-negative");
    }
    PowerDistribution dist;
    dist.urns_ = kernel.urns();
    dist.balls_ = kernel.balls();
    dist.steps_ = steps;
    dist.counts_.assign(kernel.states(), BigInt(0));
    dist.counts_[configuration_index(UrnConfiguration::initial(kernel.urns(), kernel.balls()))] = 1;

    // Counts stay integers over denominator()^step; only vector-kernel
    // products, never matrix-matrix ones.
    std::vector<BigInt> next(kernel.states());
    for (int step = 0; step < steps; ++step) {
        for (auto& c : next) c = 0;
        for (std::size_t from = 0; from < kernel.states(); ++from) {
            const BigInt& weight = dist.counts_[from];
            if (weight == 0) continue;
            for (const DenseKernel::Entry& e : kernel.row(from)) {
                next[e.to] += weight * e.numerator;
            }
        }
        dist.counts_.swap(next);
        dist.denominator_ *= kernel.denominator();
    }
    return dist;
}

std::uint64_t SplitMix64::next() noexcept {
    std::uint64_t z = (state_ += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::bounded(std::uint64_t bound) noexcept {
    // reject the low  2^64 mod bound  values so every residue is equally likely
    const std::uint64_t reject = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t draw = next();
        if (draw >= reject) return draw % bound;
    }
}

EmpiricalDistribution simulate(ShuffleKind kind, int urns, int balls, int steps,
                               std::uint64_t trials, std::uint64_t seed,
                               std::size_t max_states) {
    if (urns < 2 || balls < 1) {
        throw std::invalid_argument("simulate: need r >= 2 urns and n >= 1 balls");
    }
    if (steps < 0) {
        throw std::invalid_argument("simulate: steps must be non-negative");
    }
    if (trials < 1) {
        throw std::invalid_argument("simulate: need at least one trial");
    }
    const std::size_t states = state_count(urns, balls, max_states);

    EmpiricalDistribution sample;
    sample.urns = urns;
    sample.balls = balls;
    sample.steps = steps;
    sample.trials = trials;
    sample.seed = seed;
    sample.counts.assign(states, 0);

    const std::uint64_t n = static_cast<std::uint64_t>(balls);
    const std::uint64_t r = static_cast<std::uint64_t>(urns);
    std::vector<int> colors(static_cast<std::size_t>(balls));
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        // one derived stream per trial, so subsets of trials replay exactly
        SplitMix64 rng(seed + (trial + 1) * SplitMix64::kGolden);
        std::fill(colors.begin(), colors.end(), 0);
        for (int step = 0; step < steps; ++step) {
            const std::size_t ball = static_cast<std::size_t>(rng.bounded(n));
            const int current = colors[ball];
            switch (kind) {
                case ShuffleKind::AnyOther: {
                    const int draw = static_cast<int>(rng.bounded(r - 1));
                    colors[ball] = draw < current ? draw : draw + 1;
                    break;
                }
                case ShuffleKind::CyclicLeft:
                    colors[ball] = (current + 1) % urns;
                    break;
                case ShuffleKind::CyclicBidirectional:
                    if (urns == 2) {
                        colors[ball] = 1 - current;
                    } else {
                        const bool up = rng.bounded(2) == 1;
                        colors[ball] = (current + (up ? 1 : urns - 1)) % urns;
                    }
                    break;
            }
        }
        std::size_t index = 0;
        for (int c : colors) {
            index = index * static_cast<std::size_t>(urns) + static_cast<std::size_t>(c);
        }
        ++sample.counts[index];
    }
    return sample;
}

double empirical_tv(const EmpiricalDistribution& sample, const PowerDistribution& exact) {
    if (sample.urns != exact.urns() || sample.balls != exact.balls() ||
        sample.counts.size() != exact.states()) {
        throw std::invalid_argument("empirical_tv: mismatched state spaces");
    }
    const double trials = static_cast<double>(sample.trials);
    double total = 0.0;
    for (std::size_t i = 0; i < sample.counts.size(); ++i) {
        total += std::abs(static_cast<double>(sample.counts[i]) / trials - exact.mass(i));
    }
    return total / 2.0;
}

}  // namespace urnmix
