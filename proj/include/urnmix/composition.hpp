#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace urnmix {

using BigInt = boost::multiprecision::cpp_int;

/// A weak composition of n into r non-negative parts.  These index both the
/// spectral components k and the occupancy types l of the r-urn configuration
/// space, so almost every table in the library is addressed by one.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    /// All balls in a single urn, zeros elsewhere.
    static Composition concentrated(int urns, int balls, int urn = 0);

    int urns() const noexcept { return static_cast<int>(parts_.size()); }
    int balls() const noexcept { return total_; }
    int operator[](std::size_t i) const { return parts_.at(i); }
    const std::vector<int>& parts() const noexcept { return parts_; }

    /// Parts joined by a separator, e.g. "2|0|1".
    std::string label(char sep = '|') const;

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

/// All compositions of `balls` into `urns` parts, ordered lexicographically
/// decreasing.  This ordering is fixed across the whole library: tables,
/// distributions and CSV rows all follow it, and the first entry is always
/// (n,0,...,0).
std::vector<Composition> compositions(int urns, int balls);

/// Number of compositions of `balls` into `urns` parts: C(balls+urns-1, urns-1).
BigInt composition_count(int urns, int balls);

/// Position of `c` within compositions(c.urns(), c.balls()).  Computed by
/// counting, not by enumeration, so it is cheap even when the full list would
/// not be.
std::size_t composition_rank(const Composition& c);

/// Exact binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(int n, int k);

/// Exact multinomial coefficient n! / (k_0! k_1! ... k_{r-1}!).
BigInt multinomial(const Composition& k);

}  // namespace urnmix
